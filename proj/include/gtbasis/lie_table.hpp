#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtbasis/operator.hpp"
#include "gtbasis/rational.hpp"

namespace gtb {

enum class AlgebraType { A, B };

std::string to_string(AlgebraType t);

/// Generator label: E(i,j) for gl(n) with 1 <= i,j <= n, F(i,j) for
/// o(2n+1) with -n <= i,j <= n.
struct GenIndex {
    int i = 0;
    int j = 0;
    auto operator<=>(const GenIndex&) const = default;
};

using Expansion = std::vector<std::pair<GenIndex, Rational>>;

/// Structure data of gl(n) or o(2n+1) derived from the defining matrices.
/// For o(2n+1) the defining matrices are F_ij = E_ij - E_{-j,-i} on the
/// index set -n..n, and the basis consists of the F_ij with i + j > 0.
class LieTable {
public:
    LieTable(AlgebraType type, int rank);

    AlgebraType type() const { return type_; }
    int rank() const { return rank_; }
    std::size_t dimension() const { return basis_.size(); }
    std::size_t defining_dim() const { return type_ == AlgebraType::A ? rank_ : 2 * rank_ + 1; }

    /// Every label (i,j) in the index range.
    const std::vector<GenIndex>& labels() const { return labels_; }
    const std::vector<GenIndex>& basis() const { return basis_; }
    bool is_basis(GenIndex g) const;

    const Operator& defining(GenIndex g) const { return defining_.at(g); }

    /// Coordinates of a defining-space matrix in the basis. Throws
    /// ConstructionError if the matrix is outside the algebra.
    Expansion decompose(const Operator& m) const;
    /// [X_a, X_b] in the basis (memoized).
    const Expansion& bracket(GenIndex a, GenIndex b) const;
    /// X_g in the basis: a single term, a sign-flipped term, or nothing.
    Expansion expand(GenIndex g) const;

    std::string name(GenIndex g) const;

    /// Cartan labels (k,k) in order k = 1..n.
    std::vector<GenIndex> cartan() const;

private:
    std::size_t pos(int i) const { return type_ == AlgebraType::A ? i - 1 : i + rank_; }
    int label(std::size_t p) const {
        return type_ == AlgebraType::A ? static_cast<int>(p) + 1 : static_cast<int>(p) - rank_;
    }

    AlgebraType type_;
    int rank_;
    std::vector<GenIndex> labels_;
    std::vector<GenIndex> basis_;
    std::map<GenIndex, Operator> defining_;
    mutable std::map<std::pair<GenIndex, GenIndex>, Expansion> bracket_cache_;
};

/// Representation matrices of every generator label, plus the weights of
/// the basis vectors as read off the combinatorial labels.
struct Representation {
    AlgebraType type = AlgebraType::A;
    int rank = 0;
    std::vector<Rational> highest_weight;
    std::size_t dim = 0;
    std::map<GenIndex, Operator> generators;
    std::vector<std::vector<Rational>> weights;  // per basis vector, k = 1..n
    std::size_t highest_index = 0;               // basis position of the highest vector

    const Operator& gen(int i, int j) const { return generators.at(GenIndex{i, j}); }
    const Operator& gen(GenIndex g) const { return generators.at(g); }
    /// Σ c X_g over an expansion.
    Operator combine(const Expansion& e) const;
};

/// The (2n+1)-dimensional representation given by the defining matrices
/// (type B), or the n-dimensional one (type A).
Representation defining_rep(AlgebraType type, int n);

}  // namespace gtb
