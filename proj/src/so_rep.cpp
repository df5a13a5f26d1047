#include "gtbasis/so_rep.hpp"

#include <functional>
#include <optional>

#include "gtbasis/errors.hpp"
#include "gtbasis/linalg.hpp"

namespace gtb {

namespace {

long long p1_primed(int a) { return 1LL * a * a - a + 1; }
long long p1_lower(int a) { return 1LL * a * a + 1; }
long long p1_lower_primed(int a) { return 1LL * a * a + 16; }
long long p2_primed(int a) { return 2LL * a * a + 3; }
long long p2_lower(int a) { return 3LL * a * a - a + 5; }
long long p2_lower_primed(int a) { return 1LL * a * a * a + 30; }

const DeformationProfile kProfile1{1, p1_primed, p1_lower, p1_lower_primed};
const DeformationProfile kProfile2{2, p2_primed, p2_lower, p2_lower_primed};

const Rational kHalf(1, 2);

// Scalar-type helpers: plain rationals report a vanishing denominator as a
// pole; rational functions in ε throw DivisionByZero only on the zero function.
Rational inv(const Rational& x) {
    if (x == 0) throw PoleError("vanishing denominator");
    return 1 / x;
}
RationalFunction inv(const RationalFunction& x) { return RationalFunction(Rational(1)) / x; }

template <class S>
S eps_times(long long c) {
    if constexpr (std::is_same_v<S, Rational>) {
        (void)c;
        return Rational(0);
    } else {
        return RationalFunction(UniPoly::linear(Rational(0), Rational(static_cast<long>(c))));
    }
}

template <class S>
struct Level {
    int k = 0;
    int sigma = 0;
    std::vector<S> top;           // [1..k]
    std::vector<S> primed;        // [1..k]
    std::vector<S> lower;         // [0..k-1], lower[0] = -1/2
    std::vector<S> lower_primed;  // [1..k-1]
    S fshift;                     // deformation of every F_kk eigenvalue
};

template <class S>
Level<S> make_level(const PatternB& p, int k, const DeformationProfile* d) {
    Level<S> lv;
    lv.k = k;
    lv.sigma = p.sigma(k);
    auto e = [&](long long (*f)(int), int a) { return d ? eps_times<S>(f(a)) : S(Rational(0)); };
    lv.top.resize(k + 1);
    lv.primed.resize(k + 1);
    lv.lower.resize(k);
    lv.lower_primed.resize(k);
    long long shift = 0;
    for (int a = 1; a <= k; ++a) {
        lv.top[a] = S(p.lam(k, a).to_rational() - a + kHalf);
        lv.primed[a] = S(p.primed(k, a).to_rational() - a + kHalf) + e(d ? d->primed : nullptr, a);
        if (d) shift += 2 * d->primed(a);
    }
    lv.lower[0] = S(-kHalf);
    for (int a = 1; a < k; ++a) {
        lv.lower[a] = S(p.lam(k - 1, a).to_rational() - a + kHalf) + e(d ? d->lower : nullptr, a);
        lv.lower_primed[a] = S(p.primed(k - 1, a).to_rational() - a + kHalf) + e(d ? d->lower_primed : nullptr, a);
        if (d) shift -= d->lower(a);
    }
    lv.fshift = d ? eps_times<S>(shift) : S(Rational(0));
    return lv;
}

template <class S>
S A_coeff(const Level<S>& lv, int i) {
    S r(Rational(1));
    for (int a = 1; a < lv.k; ++a) {
        if (a != i) r *= inv(lv.lower[i] - lv.lower[a]);
        r *= inv(lv.lower[i] + lv.lower[a]);
    }
    return r;
}

// B_{.,j}(x) over a primed row given 1-based.
template <class S>
S B_coeff(const std::vector<S>& row, int len, int j, const S& x) {
    S r(Rational(1));
    for (int a = 1; a <= len; ++a) {
        if (a == j) continue;
        r *= (x + row[a] + S(Rational(1))) * (x - row[a]) * inv(row[a] - row[j]);
    }
    return r;
}

template <class S>
S C_coeff(const Level<S>& lv, int i) {
    const S& li = lv.primed[i];
    S r = li * (S(Rational(1 - 2 * lv.sigma)) - S(Rational(2)) * li);
    for (int a = 1; a <= lv.k; ++a) r *= lv.top[a] - li;
    for (int a = 1; a < lv.k; ++a) r *= lv.lower[a] - li;
    for (int a = 1; a <= lv.k; ++a)
        if (a != i) r *= inv(lv.primed[a] - li);
    return r;
}

template <class S>
S weight_of(const PatternB& t, int k, const Level<S>& lv) {
    return S(pattern_weight_component(t, k)) + lv.fshift;
}

using Keep = std::function<bool(const PatternB&)>;
template <class S>
using Emit = std::function<void(const PatternB&, const S&)>;

// Φ_{k-1,-k}(u) (when u is set) or F_{k-1,-k} (when u is empty) on one array.
// Coefficients are evaluated only for targets accepted by `keep`.
template <class S>
void lowering_terms(const PatternB& p, int k, const std::optional<Rational>& u, const DeformationProfile* d,
                    const Keep& keep, const Emit<S>& emit) {
    const Level<S> lv = make_level<S>(p, k, d);
    const int sk = p.sigma(k);
    const int sk1 = k >= 2 ? p.sigma(k - 1) : 0;
    PatternB bar = p.flipped_sigma(k);
    if (k >= 2) bar = bar.flipped_sigma(k - 1);
    const S x0 = lv.lower[0];

    std::optional<S> a0;
    auto zeta0_term = [&](const PatternB& t, const S& c) {
        if (!keep(t)) return;
        if (!a0) a0 = A_coeff(lv, 0);
        S coef = *a0 * c;
        if (u) coef *= inv(S(*u) + weight_of(t, k, lv) - S(Rational(3, 2)));
        emit(t, coef);
    };
    if (sk == 0 && sk1 == 0) {
        zeta0_term(bar, S(Rational(k % 2 == 0 ? 1 : -1)));
    } else if (sk == 1 && sk1 == 0) {
        for (int j = 1; j <= k; ++j) {
            const PatternB t = bar.shifted_primed(k, j, 1);
            if (keep(t)) zeta0_term(t, B_coeff(lv.primed, k, j, x0));
        }
    } else if (sk == 0 && sk1 == 1) {
        for (int m = 1; m < k; ++m) {
            const PatternB t = bar.shifted_primed(k - 1, m, 1);
            if (keep(t)) zeta0_term(t, -B_coeff(lv.lower_primed, k - 1, m, x0));
        }
    } else {
        const S sign(Rational((k - 1) % 2 == 0 ? 1 : -1));
        for (int j = 1; j <= k; ++j)
            for (int m = 1; m < k; ++m) {
                const PatternB t = bar.shifted_primed(k, j, 1).shifted_primed(k - 1, m, 1);
                if (keep(t))
                    zeta0_term(t, sign * B_coeff(lv.primed, k, j, x0) * B_coeff(lv.lower_primed, k - 1, m, x0));
            }
    }

    for (int i = 1; i < k; ++i) {
        const S& x = lv.lower[i];
        std::optional<S> ai;
        for (int j = 1; j <= k; ++j)
            for (int m = 1; m < k; ++m) {
                const PatternB t = p.shifted_primed(k, j, 1).shifted_lam(k - 1, i, 1).shifted_primed(k - 1, m, 1);
                if (!keep(t)) continue;
                if (!ai) ai = A_coeff(lv, i);
                S den = x + S(kHalf);
                if (u) den *= S(*u) + x + weight_of(t, k, lv) - S(Rational(1));
                emit(t, *ai * B_coeff(lv.primed, k, j, x) * B_coeff(lv.lower_primed, k - 1, m, x) * inv(den));
            }
        const PatternB t = p.shifted_lam(k - 1, i, -1);
        if (!keep(t)) continue;
        if (!ai) ai = A_coeff(lv, i);
        S den = x - S(kHalf);
        if (u) den *= S(*u) - x + weight_of(t, k, lv) - S(Rational(1));
        emit(t, -*ai * inv(den));
    }
}

// Φ_{-k,k} on one array.
template <class S>
void phi_minus_terms(const PatternB& p, int k, const DeformationProfile* d, const Keep& keep, const Emit<S>& emit) {
    const Level<S> lv = make_level<S>(p, k, d);
    for (int i = 1; i <= k; ++i) {
        const PatternB t = p.shifted_primed(k, i, -1);
        if (!keep(t)) continue;
        emit(t, C_coeff(lv, i) * (weight_of(t, k, lv) - lv.primed[i] + S(Rational(1))));
    }
}

const Keep kKeepAll = [](const PatternB&) { return true; };

template <class S>
std::map<PatternB, S> raise_column(const PatternB& p, int k, const DeformationProfile* d) {
    std::map<PatternB, S> acc;
    const Rational two(2), zero(0);
    phi_minus_terms<S>(p, k, d, kKeepAll, [&](const PatternB& t1, const S& c1) {
        lowering_terms<S>(t1, k, two, d, kKeepAll, [&](const PatternB& t2, const S& c2) {
            auto [it, fresh] = acc.try_emplace(t2, c1 * c2);
            if (!fresh) it->second += c1 * c2;
        });
    });
    lowering_terms<S>(p, k, zero, d, kKeepAll, [&](const PatternB& t1, const S& c1) {
        phi_minus_terms<S>(t1, k, d, kKeepAll, [&](const PatternB& t2, const S& c2) {
            auto [it, fresh] = acc.try_emplace(t2, -(c1 * c2));
            if (!fresh) it->second -= c1 * c2;
        });
    });
    return acc;
}

template <class S>
std::map<PatternB, S> lower_column(const PatternB& p, int k, const DeformationProfile* d, const Keep& keep) {
    std::map<PatternB, S> acc;
    lowering_terms<S>(p, k, std::nullopt, d, keep, [&](const PatternB& t, const S& c) {
        auto [it, fresh] = acc.try_emplace(t, c);
        if (!fresh) it->second += c;
    });
    return acc;
}

// Specializes a deformed column at ε = 0, keeping valid targets only.
// Throws PoleError / DivisionByZero for the caller's profile fallback.
std::map<std::size_t, Rational> specialize(const SoRepresentation& rep, const std::map<PatternB, RationalFunction>& col,
                                           std::vector<std::pair<std::size_t, std::string>>* trace) {
    std::map<std::size_t, Rational> out;
    for (const auto& [t, f] : col) {
        auto pos = rep.index.find(t);
        if (!pos) continue;
        const Rational v = rf_limit_at(f, Rational(0));
        if (trace && !f.is_zero()) trace->emplace_back(*pos, f.to_string("e"));
        if (v != 0) out[*pos] += v;
    }
    return out;
}

using PlainColumn = std::function<std::map<PatternB, Rational>(const PatternB&)>;
using DeformedColumn = std::function<std::map<PatternB, RationalFunction>(const PatternB&, const DeformationProfile*)>;

Operator assemble(SoRepresentation& rep, const std::string& name, const PlainColumn& plain,
                  const DeformedColumn& deformed, const SoBuildOptions& opts) {
    Operator op(rep.dim);
    for (std::size_t col = 0; col < rep.dim; ++col) {
        const PatternB& p = rep.basis[col];
        if (!opts.force_deformation) {
            try {
                for (const auto& [t, v] : plain(p)) {
                    auto pos = rep.index.find(t);
                    if (pos && v != 0) op.add(*pos, col, v);
                }
                continue;
            } catch (const PoleError&) {
                // fall through to the deformed evaluation of this column
            }
        }
        std::vector<int> profiles;
        if (opts.profile == 0)
            profiles = {1, 2};
        else
            profiles = {opts.profile};
        std::string last_error;
        bool done = false;
        for (int id : profiles) {
            const DeformationProfile& prof = deformation_profile(id);
            try {
                std::vector<std::pair<std::size_t, std::string>> trace;
                auto values = specialize(rep, deformed(p, &prof), opts.record_trace ? &trace : nullptr);
                for (const auto& [row, v] : values) op.add(row, col, v);
                for (auto& [row, text] : trace) rep.deform_trace.push_back({name, col, row, id, std::move(text)});
                ++rep.deformed_columns;
                done = true;
                break;
            } catch (const PoleError& e) {
                last_error = e.what();
            } catch (const DivisionByZero& e) {
                last_error = e.what();
            }
        }
        if (!done)
            throw ConstructionError(name + ": no finite value on source pattern #" + std::to_string(col) + " (" +
                                    last_error + ")");
    }
    return op;
}

}  // namespace

const DeformationProfile& deformation_profile(int id) {
    if (id == 1) return kProfile1;
    if (id == 2) return kProfile2;
    throw std::invalid_argument("unknown deformation profile " + std::to_string(id));
}

Rational coeff_A(const PatternB& p, int k, int i) { return A_coeff(make_level<Rational>(p, k, nullptr), i); }

RationalFunction coeff_A_deformed(const PatternB& p, int k, int i, const DeformationProfile& profile) {
    return A_coeff(make_level<RationalFunction>(p, k, &profile), i);
}

Rational coeff_B(const PatternB& p, int k, int i, const Rational& x) {
    std::vector<Rational> row(k + 1);
    for (int a = 1; a <= k; ++a) row[a] = p.primed(k, a).to_rational() - a + kHalf;
    return B_coeff(row, k, i, x);
}

Rational coeff_C(const PatternB& p, int k, int i) { return C_coeff(make_level<Rational>(p, k, nullptr), i); }

Operator build_Fkk(const SoRepresentation& rep, int k) {
    std::vector<Rational> diag(rep.dim);
    for (std::size_t c = 0; c < rep.dim; ++c) diag[c] = pattern_weight_component(rep.basis[c], k);
    return Operator::diagonal(diag);
}

Operator build_Phi_minus(const SoRepresentation& rep, int k) {
    Operator op(rep.dim);
    const Keep keep = [&](const PatternB& t) { return rep.index.contains(t); };
    for (std::size_t col = 0; col < rep.dim; ++col) {
        phi_minus_terms<Rational>(rep.basis[col], k, nullptr, keep, [&](const PatternB& t, const Rational& c) {
            if (c != 0) op.add(*rep.index.find(t), col, c);
        });
    }
    return op;
}

Operator build_F_lower(SoRepresentation& rep, int k, const SoBuildOptions& opts) {
    const Keep keep = [&](const PatternB& t) { return rep.index.contains(t); };
    return assemble(
        rep, "F(" + std::to_string(k - 1) + "," + std::to_string(-k) + ")",
        [&](const PatternB& p) { return lower_column<Rational>(p, k, nullptr, keep); },
        [&](const PatternB& p, const DeformationProfile* d) { return lower_column<RationalFunction>(p, k, d, keep); },
        opts);
}

Operator build_F_raise(SoRepresentation& rep, int k, const SoBuildOptions& opts) {
    return assemble(
        rep, "F(" + std::to_string(k - 1) + "," + std::to_string(k) + ")",
        [&](const PatternB& p) { return raise_column<Rational>(p, k, nullptr); },
        [&](const PatternB& p, const DeformationProfile* d) { return raise_column<RationalFunction>(p, k, d); },
        opts);
}

std::map<PatternB, Rational> apply_Phi_u(const PatternB& p, int k, const Rational& u) {
    std::map<PatternB, Rational> acc;
    lowering_terms<Rational>(p, k, u, nullptr, kKeepAll, [&](const PatternB& t, const Rational& c) { acc[t] += c; });
    return acc;
}

SoRepresentation build_so(const SoHighestWeight& lambda, const SoBuildOptions& opts) {
    const int n = lambda.rank();
    if (n < 1) throw InvalidWeight("rank must be at least 1");
    SoRepresentation rep(lambda);
    rep.type = AlgebraType::B;
    rep.rank = n;
    for (auto e : lambda.entries()) rep.highest_weight.push_back(e.to_rational());
    rep.basis = enumerate_patterns(lambda);
    rep.index = PatternIndex<PatternB>(rep.basis);
    rep.dim = rep.basis.size();
    for (std::size_t c = 0; c < rep.dim; ++c) {
        rep.weights.push_back(pattern_weight(rep.basis[c]));
        if (rep.weights.back() == rep.highest_weight) rep.highest_index = c;
    }

    std::map<GenIndex, Operator> known;
    auto put = [&](GenIndex g, const Operator& op) {
        known.insert_or_assign(g, op);
        known.insert_or_assign(GenIndex{-g.j, -g.i}, -op);
    };
    for (int k = 1; k <= n; ++k) {
        put({k, k}, build_Fkk(rep, k));
        rep.phi_minus.push_back(build_Phi_minus(rep, k));
        put({k - 1, -k}, build_F_lower(rep, k, opts));
        put({k - 1, k}, build_F_raise(rep, k, opts));
    }

    // Bracket closure: a commutator of two known generators that the
    // defining matrices identify with c·F_s for a single unknown slot s
    // fixes F_s. Slots F_{-i,i} are zero.
    LieTable table(AlgebraType::B, n);
    for (int i = 1; i <= n; ++i) {
        put({-i, i}, Operator(rep.dim));
        put({i, -i}, Operator(rep.dim));
    }
    put({0, 0}, Operator(rep.dim));
    bool progress = true;
    while (progress && known.size() < table.labels().size()) {
        progress = false;
        std::vector<GenIndex> keys;
        for (const auto& [g, op] : known) keys.push_back(g);
        for (std::size_t x = 0; x < keys.size() && !progress; ++x) {
            for (std::size_t y = x + 1; y < keys.size() && !progress; ++y) {
                const Expansion& e = table.bracket(keys[x], keys[y]);
                if (e.size() != 1 || known.count(e.front().first)) continue;
                const auto& [slot, c] = e.front();
                put(slot, commutator(known.at(keys[x]), known.at(keys[y])).scaled(1 / c));
                progress = true;
            }
        }
    }
    if (known.size() != table.labels().size())
        throw ConstructionError("bracket closure reached only " + std::to_string(known.size()) + " of " +
                                std::to_string(table.labels().size()) + " generator slots");
    rep.generators = std::move(known);

    if (!lambda.is_zero()) {
        std::vector<const Operator*> ops;
        for (const auto& g : table.basis()) ops.push_back(&rep.gen(g));
        const std::size_t r = span_rank(ops);
        if (r != table.dimension())
            throw ConstructionError("generators span a space of dimension " + std::to_string(r) + ", expected " +
                                    std::to_string(table.dimension()));
    }
    return rep;
}

bool phi_definition_check(const SoRepresentation& rep) {
    const int n = rep.rank;
    std::vector<std::size_t> all(rep.dim);
    for (std::size_t c = 0; c < rep.dim; ++c) all[c] = c;
    for (int k = 1; k <= n; ++k) {
        Operator q = (rep.gen(0, k) * rep.gen(0, k)).scaled(Rational(-1, 2));
        for (int i = 1; i < k; ++i) q += rep.gen(-k, i) * rep.gen(i, k);
        std::vector<const Operator*> ops;
        for (int i = -k + 1; i < k; ++i)
            for (int j = i + 1; j < k; ++j) ops.push_back(&rep.gen(i, j));
        for (const auto& v : restricted_kernel(ops, all))
            if (q.apply(v) != rep.phi_minus[k - 1].apply(v)) return false;
    }
    return true;
}

}  // namespace gtb
