#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gtbasis/rational.hpp"

namespace gtb {

// ---------------------------------------------------------------------------
// Type A: gl(n)

/// (λ_1, ..., λ_n) with λ_i - λ_{i+1} a non-negative integer.
class GlHighestWeight {
public:
    /// Throws InvalidWeight naming the violated constraint.
    explicit GlHighestWeight(std::vector<Rational> entries);

    int rank() const { return static_cast<int>(entries_.size()); }
    const std::vector<Rational>& entries() const { return entries_; }
    const Rational& operator[](int i) const { return entries_.at(i - 1); }  // 1-based
    bool operator==(const GlHighestWeight&) const = default;

private:
    std::vector<Rational> entries_;
};

/// Gelfand-Tsetlin pattern: rows λ_{k,1..k}, k = n..1, stored top row first.
class GTPatternA {
public:
    GTPatternA() = default;
    explicit GTPatternA(int n);

    int rank() const { return n_; }
    const Rational& at(int k, int i) const { return flat_[offset(k) + i - 1]; }
    void set(int k, int i, const Rational& v) { flat_[offset(k) + i - 1] = v; }
    std::vector<Rational> row(int k) const;

    /// Canonical order: lexicographic over rows n-1, ..., 1 (the top row is constant).
    auto operator<=>(const GTPatternA& o) const { return flat_ <=> o.flat_; }
    bool operator==(const GTPatternA& o) const { return flat_ == o.flat_; }

private:
    std::size_t offset(int k) const;
    int n_ = 0;
    std::vector<Rational> flat_;
};

bool is_valid(const GTPatternA& p, const GlHighestWeight& lambda);
std::vector<GTPatternA> enumerate_patterns(const GlHighestWeight& lambda);

/// Component k: Σ_i λ_{ki} - Σ_i λ_{k-1,i}.
std::vector<Rational> pattern_weight(const GTPatternA& p);

/// l_{ki} = λ_{ki} - i + 1, indexed [k-1][i-1].
std::vector<std::vector<Rational>> l_values(const GTPatternA& p);

// ---------------------------------------------------------------------------
// Type B: o(2n+1)

/// 0 >= λ_1 >= ... >= λ_n, all integers or all half-integers.
class SoHighestWeight {
public:
    /// Throws InvalidWeight naming the violated constraint. Rank 0 is allowed
    /// (used for the trivial subalgebra in branching).
    explicit SoHighestWeight(std::vector<HalfInt> entries);
    static SoHighestWeight from_rationals(const std::vector<Rational>& entries);

    int rank() const { return static_cast<int>(entries_.size()); }
    const std::vector<HalfInt>& entries() const { return entries_; }
    HalfInt operator[](int i) const { return entries_.at(i - 1); }  // 1-based
    /// True for the integer class (also for rank 0).
    bool is_integral() const { return entries_.empty() || entries_.front().is_integer(); }
    bool is_zero() const;
    bool operator==(const SoHighestWeight&) const = default;

private:
    std::vector<HalfInt> entries_;
};

/// B-type pattern. Stored flat in canonical order: for k = n..1 the block
/// [σ_k, λ_{k,1..k}, λ'_{k,1..k}], numbers as doubled integers. Lexicographic
/// comparison of this layout is the canonical basis order.
class PatternB {
public:
    PatternB() = default;
    explicit PatternB(int n);

    int rank() const { return n_; }
    int sigma(int k) const { return static_cast<int>(flat_[offset(k)]); }
    HalfInt lam(int k, int i) const { return HalfInt::from_doubled(flat_[offset(k) + i]); }
    HalfInt primed(int k, int i) const { return HalfInt::from_doubled(flat_[offset(k) + k + i]); }

    void set_sigma(int k, int s) { flat_[offset(k)] = s; }
    void set_lam(int k, int i, HalfInt v) { flat_[offset(k) + i] = v.doubled(); }
    void set_primed(int k, int i, HalfInt v) { flat_[offset(k) + k + i] = v.doubled(); }

    // Copies with one entry changed; the result need not be a pattern.
    PatternB shifted_lam(int k, int i, int delta) const;
    PatternB shifted_primed(int k, int i, int delta) const;
    PatternB flipped_sigma(int k) const;

    const std::vector<std::int64_t>& flat() const { return flat_; }
    auto operator<=>(const PatternB& o) const { return flat_ <=> o.flat_; }
    bool operator==(const PatternB& o) const { return flat_ == o.flat_; }

private:
    std::size_t offset(int k) const;
    int n_ = 0;
    std::vector<std::int64_t> flat_;
};

bool is_valid(const PatternB& p, const SoHighestWeight& lambda);
std::vector<PatternB> enumerate_patterns(const SoHighestWeight& lambda);

/// F_kk eigenvalue σ_k + 2Σλ'_{ki} - Σλ_{ki} - Σλ_{k-1,i}, k = 1..n.
std::vector<Rational> pattern_weight(const PatternB& p);
Rational pattern_weight_component(const PatternB& p, int k);

/// l-values of a B pattern; l_{k0} = -1/2 for every k.
struct BLValues {
    std::vector<std::vector<Rational>> l;       // [k-1][i-1] = λ_{ki} - i + 1/2
    std::vector<std::vector<Rational>> primed;  // [k-1][i-1] = λ'_{ki} - i + 1/2
    static Rational l_k0() { return Rational(-1, 2); }
};
BLValues l_values(const PatternB& p);

// ---------------------------------------------------------------------------
// Shifts

enum class ShiftKind { Unprimed, Primed, SigmaK, SigmaKMinus1 };

/// One elementary change of a pattern: λ_{ki} ± 1, λ'_{ki} ± 1, or a flip of
/// σ_k / σ_{k-1}. `index` is ignored for flips and `sign` for Unprimed/Primed
/// must be ±1.
struct Shift {
    ShiftKind kind;
    int k;
    int index = 0;
    int sign = 1;
};

template <class P>
struct ShiftResult {
    P array;
    bool valid;
};

ShiftResult<PatternB> pattern_shift(const PatternB& p, const SoHighestWeight& lambda, Shift s);
/// Type A only knows Unprimed shifts.
ShiftResult<GTPatternA> pattern_shift(const GTPatternA& p, const GlHighestWeight& lambda, int k, int i,
                                      int sign);

/// Position lookup in an enumerated basis.
template <class P>
class PatternIndex {
public:
    PatternIndex() = default;
    explicit PatternIndex(const std::vector<P>& basis) {
        for (std::size_t i = 0; i < basis.size(); ++i) index_.emplace(basis[i], i);
    }
    std::optional<std::size_t> find(const P& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const P& p) const { return index_.count(p) != 0; }
    std::size_t size() const { return index_.size(); }

private:
    std::map<P, std::size_t> index_;
};

}  // namespace gtb
