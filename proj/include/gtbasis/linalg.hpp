#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gtbasis/operator.hpp"

namespace gtb {

/// Incremental exact reduced row echelon form over columns [0, ncols).
/// Pivot rows are kept fully reduced against each other.
class RowReducer {
public:
    explicit RowReducer(std::size_t ncols) : ncols_(ncols) {}

    /// Reduces `row` against the current pivots; returns true if it was
    /// independent (and became a new pivot row).
    bool add_row(SparseVector row);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t ncols() const { return ncols_; }
    const std::map<std::size_t, SparseVector>& pivots() const { return pivots_; }

    /// Basis of {x : row . x = 0 for every added row}.
    std::vector<SparseVector> kernel_basis() const;

private:
    std::size_t ncols_;
    std::map<std::size_t, SparseVector> pivots_;
};

/// Exact linear system A x = b over `nvars` unknowns.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t nvars) : nvars_(nvars), reducer_(nvars + 1) {}

    /// Throws InconsistentSystem as soon as the equations contradict.
    void add_equation(const SparseVector& coeffs, const Rational& rhs);

    struct Solution {
        SparseVector particular;               // free variables set to zero
        std::vector<std::size_t> free_vars;
    };
    Solution solve() const;

private:
    std::size_t nvars_;
    RowReducer reducer_;
};

/// Kernel of the stacked rows of `ops`, restricted to the given columns.
/// Returned vectors are expressed in the full basis.
std::vector<SparseVector> restricted_kernel(const std::vector<const Operator*>& ops,
                                            const std::vector<std::size_t>& columns);

/// Rank of a family of operators viewed as vectors in the dim^2-space.
std::size_t span_rank(const std::vector<const Operator*>& ops);

}  // namespace gtb
