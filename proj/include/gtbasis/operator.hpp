#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "gtbasis/rational.hpp"

namespace gtb {

using SparseVector = std::map<std::size_t, Rational>;

/// Sparse square matrix over Q. Column = source basis vector, row = target.
/// Zero entries are never stored.
class Operator {
public:
    Operator() = default;
    explicit Operator(std::size_t dim) : dim_(dim), rows_(dim) {}

    static Operator identity(std::size_t dim);
    static Operator diagonal(const std::vector<Rational>& diag);

    std::size_t dim() const { return dim_; }
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    Rational at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, const Rational& v);
    void add(std::size_t row, std::size_t col, const Rational& v);

    const SparseVector& row(std::size_t r) const { return rows_[r]; }
    SparseVector column(std::size_t c) const;

    Operator operator+(const Operator& o) const;
    Operator operator-(const Operator& o) const;
    Operator operator-() const { return scaled(-1); }
    Operator operator*(const Operator& o) const;
    Operator scaled(const Rational& s) const;
    Operator transposed() const;
    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);

    /// Image of a sparse vector.
    SparseVector apply(const SparseVector& v) const;

    bool operator==(const Operator& o) const { return dim_ == o.dim_ && rows_ == o.rows_; }

    bool is_diagonal() const;
    /// The scalar c if this equals c * Id.
    std::optional<Rational> scalar_value() const;

    /// (row, col, value) sorted by (row, col).
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries() const;

private:
    std::size_t dim_ = 0;
    std::vector<SparseVector> rows_;
};

Operator commutator(const Operator& a, const Operator& b);

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

}  // namespace gtb
