#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gtbasis/rational.hpp"

namespace gtb {

/// Univariate polynomial over Q, lowest degree first, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(const Rational& c);  // NOLINT: constants embed implicitly

    static UniPoly variable();
    /// a + b*x
    static UniPoly linear(const Rational& a, const Rational& b);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return coeffs_.back(); }
    Rational eval(const Rational& x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rational& s) const;
    UniPoly monic() const;

    /// Euclidean division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string(const std::string& var = "e") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// Reduced quotient num/den with monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    RationalFunction(const UniPoly& p) : num_(p), den_(Rational(1)) {}   // NOLINT
    /// Throws DivisionByZero if den is the zero polynomial.
    RationalFunction(UniPoly num, UniPoly den);

    static RationalFunction variable() { return RationalFunction(UniPoly::variable()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    /// Throws DivisionByZero on the zero function.
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string(const std::string& var = "e") const;

private:
    void reduce();
    UniPoly num_;
    UniPoly den_;
};

/// Value of f at x0. Since f is reduced, removable singularities are already
/// gone; a vanishing denominator is a genuine pole and throws PoleError.
Rational rf_limit_at(const RationalFunction& f, const Rational& x0);

}  // namespace gtb
