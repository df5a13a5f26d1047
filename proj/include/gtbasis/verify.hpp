#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtbasis/gl_rep.hpp"
#include "gtbasis/lie_table.hpp"
#include "gtbasis/so_rep.hpp"

namespace gtb {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on success
};

struct VerificationReport {
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string witness = {});
    bool passed() const;
    /// First failing check, if any.
    const Check* first_failure() const;
};

/// Every commutator of basis generators against the table derived from the
/// defining matrices, plus X_g = its basis expansion for every label g.
VerificationReport check_structure_constants(const Representation& rep);

/// Weyl dimension; type B weights use the non-positive convention of the
/// patterns. Throws InvalidWeight if the formula is not an integer.
Integer weyl_dim(AlgebraType type, const std::vector<Rational>& lambda);

/// Number of ρ interleaving both λ and μ (rank n-1) in the common parity class.
Integer branching_multiplicity(const SoHighestWeight& lambda, const SoHighestWeight& mu);

/// All μ of rank n-1 with non-zero multiplicity, in decreasing order.
std::vector<std::pair<SoHighestWeight, Integer>> branching_table(const SoHighestWeight& lambda);

/// Highest-vector counts per μ against branching_multiplicity, and
/// Σ c(μ) dim V'(μ) = dim V(λ).
VerificationReport check_branching(const SoRepresentation& rep);

struct CasimirResult {
    std::optional<Rational> scalar;  // empty if Σ X_ij X_ji is not scalar
    Rational expected;               // value on the highest vector via the table
    std::string witness;
};
CasimirResult casimir_scalar(const Representation& rep);

/// Multiplicity of every weight (pattern coordinates) by the Freudenthal
/// recursion. Throws std::length_error above `cap` total dimension.
std::map<std::vector<Rational>, Integer> freudenthal_multiplicities(AlgebraType type, const std::vector<Rational>& lambda,
                                                                    const Integer& cap = Integer(100000));

/// Histogram of basis weights.
std::map<std::vector<Rational>, Integer> weight_histogram(const Representation& rep);

/// Whether an invertible T with T X^a_g = X^b_g T for every generator exists.
bool intertwiner_exists(const Representation& a, const Representation& b, std::string* witness = nullptr);

/// z_{in} ξ_μ = -Π_j (m_i - l_j) ξ_{μ+δ_i} for every admissible μ and i.
VerificationReport check_z_action(const GlRepresentation& rep);

enum class CheckLevel { Fast, Full };

VerificationReport verify_gl(const GlRepresentation& rep, CheckLevel level);
VerificationReport verify_so(const SoRepresentation& rep, CheckLevel level);

}  // namespace gtb
