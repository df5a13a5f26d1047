#include "gtbasis/linalg.hpp"

#include <unordered_map>

#include "gtbasis/errors.hpp"

namespace gtb {

bool RowReducer::add_row(SparseVector row) {
    std::vector<std::size_t> hits;
    for (const auto& [c, v] : row)
        if (pivots_.count(c)) hits.push_back(c);
    for (std::size_t c : hits) {
        auto it = row.find(c);
        if (it == row.end()) continue;
        const Rational factor = -it->second;
        axpy(row, factor, pivots_.at(c));
    }
    if (row.empty()) return false;
    const std::size_t lead = row.begin()->first;
    const Rational inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    for (auto& [p, prow] : pivots_) {
        auto it = prow.find(lead);
        if (it == prow.end()) continue;
        const Rational factor = -it->second;
        axpy(prow, factor, row);
    }
    pivots_.emplace(lead, std::move(row));
    return true;
}

std::vector<SparseVector> RowReducer::kernel_basis() const {
    std::vector<SparseVector> basis;
    for (std::size_t f = 0; f < ncols_; ++f) {
        if (pivots_.count(f)) continue;
        SparseVector x;
        x.emplace(f, 1);
        for (const auto& [p, prow] : pivots_) {
            auto it = prow.find(f);
            if (it != prow.end()) x.emplace(p, -it->second);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

void LinearSystem::add_equation(const SparseVector& coeffs, const Rational& rhs) {
    SparseVector row = coeffs;
    if (rhs != 0) row[nvars_] = rhs;
    reducer_.add_row(std::move(row));
    if (reducer_.pivots().count(nvars_)) throw InconsistentSystem("linear system has no solution");
}

LinearSystem::Solution LinearSystem::solve() const {
    Solution s;
    for (const auto& [p, prow] : reducer_.pivots()) {
        auto it = prow.find(nvars_);
        if (it != prow.end()) s.particular.emplace(p, it->second);
    }
    for (std::size_t v = 0; v < nvars_; ++v)
        if (!reducer_.pivots().count(v)) s.free_vars.push_back(v);
    return s;
}

std::vector<SparseVector> restricted_kernel(const std::vector<const Operator*>& ops,
                                            const std::vector<std::size_t>& columns) {
    std::unordered_map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < columns.size(); ++i) local.emplace(columns[i], i);
    RowReducer red(columns.size());
    for (const Operator* op : ops) {
        for (std::size_t r = 0; r < op->dim(); ++r) {
            SparseVector row;
            for (const auto& [c, v] : op->row(r)) {
                auto it = local.find(c);
                if (it != local.end()) row.emplace(it->second, v);
            }
            if (!row.empty()) red.add_row(std::move(row));
        }
    }
    std::vector<SparseVector> out;
    for (const auto& k : red.kernel_basis()) {
        SparseVector full;
        for (const auto& [i, v] : k) full.emplace(columns[i], v);
        out.push_back(std::move(full));
    }
    return out;
}

std::size_t span_rank(const std::vector<const Operator*>& ops) {
    if (ops.empty()) return 0;
    const std::size_t n = ops.front()->dim();
    RowReducer red(n * n);
    for (const Operator* op : ops) {
        SparseVector v;
        for (const auto& [r, c, x] : op->entries()) v.emplace(r * n + c, x);
        red.add_row(std::move(v));
    }
    return red.rank();
}

}  // namespace gtb
