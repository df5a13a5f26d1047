#pragma once

#include <vector>

#include "gtbasis/lie_table.hpp"
#include "gtbasis/patterns.hpp"

namespace gtb {

struct GlRepresentation : Representation {
    explicit GlRepresentation(GlHighestWeight l) : lambda(std::move(l)) {}

    GlHighestWeight lambda;
    std::vector<GTPatternA> basis;
    PatternIndex<GTPatternA> index;
};

/// Irreducible gl(n)-module L(λ) in the Gelfand-Tsetlin basis. The adjacent
/// generators come from the closed formulas; every other E_ij is a nested
/// commutator moving the first index toward the second.
GlRepresentation build_gl(const GlHighestWeight& lambda);

/// T(u) = Σ_σ sgn σ (u+E)_{σ(1),1} (u+E-1)_{σ(2),2} ... (u+E-n+1)_{σ(n),n}.
Operator gelfand_invariant_T(const GlRepresentation& rep, const Rational& u);

/// Π_i (u + l_i) with l_i = λ_i - i + 1.
Rational gelfand_invariant_value(const GlHighestWeight& lambda, const Rational& u);

enum class ZDirection { Lowering, Raising };

/// z_{ni} (Lowering) or z_{in} (Raising), 1 <= i <= n-1:
///   z_{ni} = Σ E_{i_1 i} E_{i_2 i_1} ... E_{n i_s} Π_{t} (h_i - h_t),
///   z_{in} = Σ E_{i i_1} E_{i_1 i_2} ... E_{i_s n} Π_{t} (h_i - h_t),
/// sums over chains i < i_1 < ... < i_s < n (resp. i > i_1 > ... > i_s >= 1),
/// t running over the indices strictly between i and n (resp. below i) that
/// are not in the chain, h_t = E_tt - t + 1. The h-polynomial stands to the
/// right. Meaningful on vectors killed by E_ab, a < b < n.
Operator lowering_operator_z(const GlRepresentation& rep, int i, ZDirection dir);

/// Basis of the vectors of g_{n-1}-weight μ killed by every E_ab, a < b < n.
std::vector<SparseVector> g_highest_vectors(const GlRepresentation& rep, const std::vector<Rational>& mu);

/// Basis position of the pattern whose row n-1 is μ and whose lower rows are
/// μ truncated (the g_{n-1}-highest pattern); -1 if μ does not interleave λ.
long highest_pattern_for(const GlRepresentation& rep, const std::vector<Rational>& mu);

/// The symmetric form with <ξ,ξ> = 1 and E_ij^T G = G E_ji for all i, j,
/// obtained by an exact solve over pairs of equal weight. Throws
/// InconsistentSystem if no such form exists and ConstructionError if it is
/// not unique.
Operator contravariant_gram(const GlRepresentation& rep);

}  // namespace gtb
