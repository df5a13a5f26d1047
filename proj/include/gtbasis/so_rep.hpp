#pragma once

#include <map>
#include <string>
#include <vector>

#include "gtbasis/lie_table.hpp"
#include "gtbasis/patterns.hpp"
#include "gtbasis/poly.hpp"

namespace gtb {

/// Per-entry multipliers of the deformation variable ε. Within level k the
/// entries λ'_{k,a}, λ_{k-1,a}, λ'_{k-1,a} are moved by primed(a)·ε,
/// lower(a)·ε, lower_primed(a)·ε; the top row λ_{k,.} and l_{k0} = -1/2 stay.
struct DeformationProfile {
    int id = 1;
    long long (*primed)(int a);
    long long (*lower)(int a);
    long long (*lower_primed)(int a);
};

const DeformationProfile& deformation_profile(int id);  // id 1 or 2

/// One matrix entry that needed the ε-deformation, before specialization.
struct DeformTraceEntry {
    std::string generator;
    std::size_t source = 0;
    std::size_t target = 0;
    int profile = 1;
    std::string value;  // rational function of e
};

struct SoBuildOptions {
    /// Skip the plain-rational fast path and evaluate every column deformed.
    bool force_deformation = false;
    /// 0: profile 1 with fallback to profile 2; otherwise only that profile.
    int profile = 0;
    bool record_trace = false;
};

struct SoRepresentation : Representation {
    explicit SoRepresentation(SoHighestWeight l) : lambda(std::move(l)) {}

    SoHighestWeight lambda;
    std::vector<PatternB> basis;
    PatternIndex<PatternB> index;
    /// Φ_{-k,k} from its closed formula, k = 1..n (index k-1).
    std::vector<Operator> phi_minus;
    std::vector<DeformTraceEntry> deform_trace;
    std::size_t deformed_columns = 0;
};

// Coefficient families evaluated on plain pattern data. Each throws
// PoleError if a denominator vanishes.

/// A_{ki}, i = 0..k-1.
Rational coeff_A(const PatternB& p, int k, int i);
RationalFunction coeff_A_deformed(const PatternB& p, int k, int i, const DeformationProfile& profile);
/// B_{ki}(x), i = 1..k.
Rational coeff_B(const PatternB& p, int k, int i, const Rational& x);
/// C_{ki}, i = 1..k.
Rational coeff_C(const PatternB& p, int k, int i);

Operator build_Fkk(const SoRepresentation& rep, int k);
/// Φ_{-k,k} from the closed formula (targets pruned).
Operator build_Phi_minus(const SoRepresentation& rep, int k);
/// F_{k-1,-k}; may record deformed entries into rep.deform_trace.
Operator build_F_lower(SoRepresentation& rep, int k, const SoBuildOptions& opts = {});
/// F_{k-1,k} = Φ_{k-1,-k}(2) Φ_{-k,k} - Φ_{-k,k} Φ_{k-1,-k}(0).
Operator build_F_raise(SoRepresentation& rep, int k, const SoBuildOptions& opts = {});

/// Φ_{k-1,-k}(u) applied to one array, plain rationals, no pruning of
/// targets (used by tests). Throws PoleError on a vanishing denominator.
std::map<PatternB, Rational> apply_Phi_u(const PatternB& p, int k, const Rational& u);

/// Full irreducible o(2n+1)-module V(λ): F_kk, F_{k-1,k}, F_{k-1,-k} from the
/// closed formulas, the rest by bracket closure. Throws ConstructionError.
SoRepresentation build_so(const SoHighestWeight& lambda, const SoBuildOptions& opts = {});

/// Compares Σ_{i=1}^{k-1} F_{-k,i} F_{ik} - ½ F_{0k}² with the closed-form
/// Φ_{-k,k} on the vectors killed by every F_ij, -k < i < j < k.
bool phi_definition_check(const SoRepresentation& rep);

}  // namespace gtb
