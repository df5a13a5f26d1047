#include "gtbasis/poly.hpp"

#include <sstream>

#include "gtbasis/errors.hpp"

namespace gtb {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

UniPoly UniPoly::variable() { return UniPoly(std::vector<Rational>{0, 1}); }

UniPoly UniPoly::linear(const Rational& a, const Rational& b) {
    return UniPoly(std::vector<Rational>{a, b});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    if (s == 0) return {};
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return scaled(1 / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (degree() < divisor.degree()) return {UniPoly(), *this};
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quo(coeffs_.size() - divisor.coeffs_.size() + 1);
    const Rational inv_lead = 1 / divisor.leading();
    const int dd = divisor.degree();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rational q = rem[i] * inv_lead;
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
    }
    rem.resize(dd);
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (i == 0 || mag != 1) os << gtb::to_string(mag);
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

RationalFunction::RationalFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        UniPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        num_ = num_.scaled(1 / lead);
        den_ = den_.scaled(1 / lead);
    }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return {};
    // cross-cancel first so the products stay small
    UniPoly g1 = (num_.degree() > 0 && o.den_.degree() > 0) ? gcd(num_, o.den_) : UniPoly(Rational(1));
    UniPoly g2 = (o.num_.degree() > 0 && den_.degree() > 0) ? gcd(o.num_, den_) : UniPoly(Rational(1));
    UniPoly a = g1.degree() > 0 ? num_.divmod(g1).first : num_;
    UniPoly d = g1.degree() > 0 ? o.den_.divmod(g1).first : o.den_;
    UniPoly c = g2.degree() > 0 ? o.num_.divmod(g2).first : o.num_;
    UniPoly b = g2.degree() > 0 ? den_.divmod(g2).first : den_;
    RationalFunction r;
    r.num_ = a * c;
    r.den_ = b * d;
    const Rational lead = r.den_.leading();
    if (lead != 1) {
        r.num_ = r.num_.scaled(1 / lead);
        r.den_ = r.den_.scaled(1 / lead);
    }
    return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
    RationalFunction inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    const Rational lead = inv.den_.leading();
    if (lead != 1) {
        inv.num_ = inv.num_.scaled(1 / lead);
        inv.den_ = inv.den_.scaled(1 / lead);
    }
    return *this * inv;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

Rational rf_limit_at(const RationalFunction& f, const Rational& x0) {
    const Rational d = f.den().eval(x0);
    if (d == 0) throw PoleError("pole at " + to_string(x0) + " of " + f.to_string());
    return f.num().eval(x0) / d;
}

}  // namespace gtb
