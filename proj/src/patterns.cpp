#include "gtbasis/patterns.hpp"

#include <functional>

#include "gtbasis/errors.hpp"

namespace gtb {

// ---------------------------------------------------------------------------
// Type A

GlHighestWeight::GlHighestWeight(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidWeight("rank must be at least 1");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
        const Rational d = entries_[i] - entries_[i + 1];
        if (!is_integer(d) || d < 0)
            throw InvalidWeight("lambda_" + std::to_string(i + 1) + " - lambda_" + std::to_string(i + 2) +
                                " must be a non-negative integer");
    }
}

GTPatternA::GTPatternA(int n) : n_(n), flat_(static_cast<std::size_t>(n * (n + 1) / 2)) {}

std::size_t GTPatternA::offset(int k) const {
    // rows n, n-1, ..., k+1 precede row k
    return static_cast<std::size_t>((n_ * (n_ + 1) - k * (k + 1)) / 2);
}

std::vector<Rational> GTPatternA::row(int k) const {
    return {flat_.begin() + static_cast<std::ptrdiff_t>(offset(k)),
            flat_.begin() + static_cast<std::ptrdiff_t>(offset(k) + k)};
}

bool is_valid(const GTPatternA& p, const GlHighestWeight& lambda) {
    const int n = lambda.rank();
    if (p.rank() != n) return false;
    for (int i = 1; i <= n; ++i)
        if (p.at(n, i) != lambda[i]) return false;
    for (int k = n; k >= 2; --k) {
        for (int i = 1; i < k; ++i) {
            const Rational upper = p.at(k, i) - p.at(k - 1, i);
            const Rational lower = p.at(k - 1, i) - p.at(k, i + 1);
            if (!is_integer(upper) || upper < 0 || !is_integer(lower) || lower < 0) return false;
        }
    }
    return true;
}

std::vector<GTPatternA> enumerate_patterns(const GlHighestWeight& lambda) {
    const int n = lambda.rank();
    GTPatternA p(n);
    for (int i = 1; i <= n; ++i) p.set(n, i, lambda[i]);
    std::vector<GTPatternA> out;
    // Fill row k-1 entry by entry, left to right; rows are visited top-down,
    // which is exactly the lexicographic order of the flat layout.
    std::function<void(int, int)> fill = [&](int k, int i) {
        if (k == 1) {
            out.push_back(p);
            return;
        }
        if (i == k) {
            fill(k - 1, 1);
            return;
        }
        for (Rational v = p.at(k, i + 1); v <= p.at(k, i); v += 1) {
            p.set(k - 1, i, v);
            fill(k, i + 1);
        }
    };
    fill(n, 1);
    return out;
}

std::vector<Rational> pattern_weight(const GTPatternA& p) {
    std::vector<Rational> w(p.rank());
    for (int k = 1; k <= p.rank(); ++k) {
        Rational s = 0;
        for (int i = 1; i <= k; ++i) s += p.at(k, i);
        for (int i = 1; i < k; ++i) s -= p.at(k - 1, i);
        w[k - 1] = s;
    }
    return w;
}

std::vector<std::vector<Rational>> l_values(const GTPatternA& p) {
    std::vector<std::vector<Rational>> l(p.rank());
    for (int k = 1; k <= p.rank(); ++k)
        for (int i = 1; i <= k; ++i) l[k - 1].push_back(p.at(k, i) - i + 1);
    return l;
}

ShiftResult<GTPatternA> pattern_shift(const GTPatternA& p, const GlHighestWeight& lambda, int k, int i,
                                      int sign) {
    GTPatternA q = p;
    q.set(k, i, p.at(k, i) + sign);
    const bool ok = is_valid(q, lambda);
    return {std::move(q), ok};
}

// ---------------------------------------------------------------------------
// Type B

SoHighestWeight::SoHighestWeight(std::vector<HalfInt> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!entries_[i].same_class(entries_.front()))
            throw InvalidWeight("entries must be all integers or all half-integers");
    }
    if (!entries_.empty() && entries_.front() > HalfInt())
        throw InvalidWeight("lambda_1 must be non-positive");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
        if (entries_[i] < entries_[i + 1])
            throw InvalidWeight("lambda_" + std::to_string(i + 1) + " >= lambda_" + std::to_string(i + 2) +
                                " is violated");
    }
}

SoHighestWeight SoHighestWeight::from_rationals(const std::vector<Rational>& entries) {
    std::vector<HalfInt> h;
    h.reserve(entries.size());
    for (const auto& r : entries) h.push_back(HalfInt::from_rational(r));
    return SoHighestWeight(std::move(h));
}

bool SoHighestWeight::is_zero() const {
    for (auto e : entries_)
        if (e != HalfInt()) return false;
    return true;
}

PatternB::PatternB(int n) : n_(n), flat_(static_cast<std::size_t>(n * (n + 2))) {}

std::size_t PatternB::offset(int k) const {
    // blocks n, ..., k+1 of sizes 2j+1 precede block k
    return static_cast<std::size_t>(n_ * (n_ + 2) - k * (k + 2));
}

PatternB PatternB::shifted_lam(int k, int i, int delta) const {
    PatternB q = *this;
    q.set_lam(k, i, lam(k, i) + delta);
    return q;
}

PatternB PatternB::shifted_primed(int k, int i, int delta) const {
    PatternB q = *this;
    q.set_primed(k, i, primed(k, i) + delta);
    return q;
}

PatternB PatternB::flipped_sigma(int k) const {
    PatternB q = *this;
    q.set_sigma(k, 1 - sigma(k));
    return q;
}

bool is_valid(const PatternB& p, const SoHighestWeight& lambda) {
    const int n = lambda.rank();
    if (p.rank() != n) return false;
    for (int i = 1; i <= n; ++i)
        if (p.lam(n, i) != lambda[i]) return false;
    const HalfInt zero;
    const HalfInt ref = n > 0 ? lambda[1] : zero;
    const bool integral = lambda.is_integral();
    for (int k = 1; k <= n; ++k) {
        if (p.sigma(k) != 0 && p.sigma(k) != 1) return false;
        for (int i = 1; i <= k; ++i) {
            const HalfInt a = p.lam(k, i);
            const HalfInt b = p.primed(k, i);
            if (!a.same_class(ref) || !b.same_class(ref) || a > zero || b > zero) return false;
            // λ'_{k,i} ∈ [λ_{k,i}, λ_{k,i-1}] with λ_{k,0} := 0
            const HalfInt upper = i == 1 ? zero : p.lam(k, i - 1);
            if (b < a || b > upper) return false;
        }
        if (k >= 2) {
            for (int i = 1; i < k; ++i) {
                const HalfInt m = p.lam(k - 1, i);
                if (m > p.primed(k, i) || m < p.primed(k, i + 1)) return false;
            }
        }
        if (integral && p.sigma(k) == 1 && p.primed(k, 1) > HalfInt::integer(-1)) return false;
    }
    return true;
}

std::vector<PatternB> enumerate_patterns(const SoHighestWeight& lambda) {
    const int n = lambda.rank();
    PatternB p(n);
    for (int i = 1; i <= n; ++i) p.set_lam(n, i, lambda[i]);
    std::vector<PatternB> out;
    if (n == 0) {
        out.push_back(p);
        return out;
    }
    const bool integral = lambda.is_integral();
    const HalfInt top = integral ? HalfInt() : HalfInt::from_doubled(-1);  // largest admissible entry

    // Visiting order per level k: σ_k, row λ_{k,.} (fixed when k = n), row
    // λ'_{k,.}; this matches the flat layout, so output is sorted.
    std::function<void(int)> level;
    std::function<void(int, int)> primed_row;
    std::function<void(int, int)> lower_row;

    primed_row = [&](int k, int i) {
        if (i > k) {
            if (k == 1)
                out.push_back(p);
            else
                level(k - 1);
            return;
        }
        HalfInt hi = i == 1 ? top : p.lam(k, i - 1);
        if (i == 1 && integral && p.sigma(k) == 1 && hi > HalfInt::integer(-1)) hi = HalfInt::integer(-1);
        for (HalfInt v = p.lam(k, i); v <= hi; v = v + 1) {
            p.set_primed(k, i, v);
            primed_row(k, i + 1);
        }
    };
    // Row λ_{k,.} between λ'_{k+1,.}.
    lower_row = [&](int k, int i) {
        if (i > k) {
            primed_row(k, 1);
            return;
        }
        for (HalfInt v = p.primed(k + 1, i + 1); v <= p.primed(k + 1, i); v = v + 1) {
            p.set_lam(k, i, v);
            lower_row(k, i + 1);
        }
    };
    level = [&](int k) {
        for (int s = 0; s <= 1; ++s) {
            p.set_sigma(k, s);
            if (k == n)
                primed_row(k, 1);
            else
                lower_row(k, 1);
        }
    };
    level(n);
    return out;
}

Rational pattern_weight_component(const PatternB& p, int k) {
    std::int64_t doubled = 2 * p.sigma(k);
    for (int i = 1; i <= k; ++i) doubled += 2 * p.primed(k, i).doubled() - p.lam(k, i).doubled();
    for (int i = 1; i < k; ++i) doubled -= p.lam(k - 1, i).doubled();
    return HalfInt::from_doubled(doubled).to_rational();
}

std::vector<Rational> pattern_weight(const PatternB& p) {
    std::vector<Rational> w;
    for (int k = 1; k <= p.rank(); ++k) w.push_back(pattern_weight_component(p, k));
    return w;
}

BLValues l_values(const PatternB& p) {
    BLValues v;
    v.l.resize(p.rank());
    v.primed.resize(p.rank());
    const Rational half(1, 2);
    for (int k = 1; k <= p.rank(); ++k) {
        for (int i = 1; i <= k; ++i) {
            v.l[k - 1].push_back(p.lam(k, i).to_rational() - i + half);
            v.primed[k - 1].push_back(p.primed(k, i).to_rational() - i + half);
        }
    }
    return v;
}

ShiftResult<PatternB> pattern_shift(const PatternB& p, const SoHighestWeight& lambda, Shift s) {
    PatternB q;
    switch (s.kind) {
        case ShiftKind::Unprimed: q = p.shifted_lam(s.k, s.index, s.sign); break;
        case ShiftKind::Primed: q = p.shifted_primed(s.k, s.index, s.sign); break;
        case ShiftKind::SigmaK: q = p.flipped_sigma(s.k); break;
        case ShiftKind::SigmaKMinus1:
            if (s.k < 2) return {p, false};
            q = p.flipped_sigma(s.k - 1);
            break;
    }
    const bool ok = is_valid(q, lambda);
    return {std::move(q), ok};
}

}  // namespace gtb
