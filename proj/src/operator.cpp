#include "gtbasis/operator.hpp"

#include <stdexcept>

namespace gtb {

namespace {
void check_dims(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("operator dimension mismatch");
}
}  // namespace

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
    if (a == 0) return;
    for (const auto& [i, v] : x) {
        auto [it, inserted] = y.try_emplace(i, a * v);
        if (!inserted) {
            it->second += a * v;
            if (it->second == 0) y.erase(it);
        }
    }
}

Operator Operator::identity(std::size_t dim) {
    Operator m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.rows_[i].emplace(i, 1);
    return m;
}

Operator Operator::diagonal(const std::vector<Rational>& diag) {
    Operator m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (diag[i] != 0) m.rows_[i].emplace(i, diag[i]);
    return m;
}

std::size_t Operator::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

Rational Operator::at(std::size_t row, std::size_t col) const {
    auto it = rows_.at(row).find(col);
    return it == rows_[row].end() ? Rational(0) : it->second;
}

void Operator::set(std::size_t row, std::size_t col, const Rational& v) {
    if (row >= dim_ || col >= dim_) throw std::out_of_range("operator index out of range");
    if (v == 0)
        rows_[row].erase(col);
    else
        rows_[row][col] = v;
}

void Operator::add(std::size_t row, std::size_t col, const Rational& v) {
    if (row >= dim_ || col >= dim_) throw std::out_of_range("operator index out of range");
    if (v == 0) return;
    auto [it, inserted] = rows_[row].try_emplace(col, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) rows_[row].erase(it);
    }
}

SparseVector Operator::column(std::size_t c) const {
    SparseVector out;
    for (std::size_t r = 0; r < dim_; ++r) {
        auto it = rows_[r].find(c);
        if (it != rows_[r].end()) out.emplace(r, it->second);
    }
    return out;
}

Operator& Operator::operator+=(const Operator& o) {
    check_dims(*this, o);
    for (std::size_t r = 0; r < dim_; ++r) axpy(rows_[r], 1, o.rows_[r]);
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    check_dims(*this, o);
    for (std::size_t r = 0; r < dim_; ++r) axpy(rows_[r], -1, o.rows_[r]);
    return *this;
}

Operator Operator::operator+(const Operator& o) const {
    Operator r = *this;
    r += o;
    return r;
}

Operator Operator::operator-(const Operator& o) const {
    Operator r = *this;
    r -= o;
    return r;
}

Operator Operator::operator*(const Operator& o) const {
    check_dims(*this, o);
    Operator out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (const auto& [k, a] : rows_[r]) axpy(out.rows_[r], a, o.rows_[k]);
    return out;
}

Operator Operator::scaled(const Rational& s) const {
    Operator out(dim_);
    if (s == 0) return out;
    for (std::size_t r = 0; r < dim_; ++r)
        for (const auto& [c, v] : rows_[r]) out.rows_[r].emplace_hint(out.rows_[r].end(), c, v * s);
    return out;
}

SparseVector Operator::apply(const SparseVector& v) const {
    SparseVector out;
    for (std::size_t r = 0; r < dim_; ++r) {
        Rational acc = 0;
        for (const auto& [c, a] : rows_[r]) {
            auto it = v.find(c);
            if (it != v.end()) acc += a * it->second;
        }
        if (acc != 0) out.emplace(r, acc);
    }
    return out;
}

bool Operator::is_diagonal() const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (const auto& [c, v] : rows_[r])
            if (c != r) return false;
    return true;
}

std::optional<Rational> Operator::scalar_value() const {
    if (!is_diagonal()) return std::nullopt;
    if (dim_ == 0) return Rational(0);
    const Rational s = at(0, 0);
    for (std::size_t r = 1; r < dim_; ++r)
        if (at(r, r) != s) return std::nullopt;
    return s;
}

std::vector<std::tuple<std::size_t, std::size_t, Rational>> Operator::entries() const {
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> out;
    for (std::size_t r = 0; r < dim_; ++r)
        for (const auto& [c, v] : rows_[r]) out.emplace_back(r, c, v);
    return out;
}

Operator Operator::transposed() const {
    Operator t(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
    return t;
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

}  // namespace gtb
