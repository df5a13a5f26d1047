#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gtb {

/// Exact rational scalar; gmpxx keeps every result canonical.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// An element of Z ∪ (1/2 + Z), stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_doubled(std::int64_t doubled) {
        HalfInt h;
        h.doubled_ = doubled;
        return h;
    }
    static constexpr HalfInt integer(std::int64_t v) { return from_doubled(2 * v); }
    /// Throws InvalidWeight if r is not an integer or half-integer.
    static HalfInt from_rational(const Rational& r);

    constexpr std::int64_t doubled() const { return doubled_; }
    constexpr bool is_integer() const { return doubled_ % 2 == 0; }
    constexpr bool same_class(HalfInt other) const {
        return ((doubled_ - other.doubled_) % 2) == 0;
    }
    Rational to_rational() const {
        Rational r(doubled_, 2);
        r.canonicalize();
        return r;
    }

    constexpr HalfInt operator+(HalfInt o) const { return from_doubled(doubled_ + o.doubled_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_doubled(doubled_ - o.doubled_); }
    constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
    constexpr HalfInt operator+(std::int64_t k) const { return from_doubled(doubled_ + 2 * k); }
    constexpr HalfInt operator-(std::int64_t k) const { return from_doubled(doubled_ - 2 * k); }

    constexpr auto operator<=>(const HalfInt&) const = default;

private:
    std::int64_t doubled_ = 0;
};

std::string to_string(HalfInt h);

}  // namespace gtb
