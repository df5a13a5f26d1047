#include <doctest.h>

#include <functional>

#include "gtbasis/gl_rep.hpp"
#include "gtbasis/so_rep.hpp"
#include "gtbasis/verify.hpp"

using namespace gtb;

namespace {

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::vector<Rational> halves(std::vector<long> doubled) {
    std::vector<Rational> out;
    for (long d : doubled) out.push_back(q(d, 2));
    return out;
}

SoHighestWeight so_weight(std::vector<long> doubled) { return SoHighestWeight::from_rationals(halves(doubled)); }

// Oracle: count ρ in the parity class of λ satisfying both chains by walking
// every candidate tuple in a bounding box.
long brute_branching(const std::vector<Rational>& lambda, const std::vector<Rational>& mu) {
    const int n = static_cast<int>(lambda.size());
    const Rational lo = lambda.back(), hi = -lambda[0];
    std::vector<Rational> rho(n);
    long count = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            for (int a = 0; a < n; ++a) {
                const Rational upper = a == 0 ? -lambda[0] : lambda[a - 1];
                if (!(upper >= rho[a] && rho[a] >= lambda[a])) return;
            }
            for (int a = 0; a < n; ++a) {
                const Rational upper = a == 0 ? (mu.empty() ? Rational(0) : -mu[0]) : mu[a - 1];
                if (!(upper >= rho[a])) return;
                if (a < n - 1 && !(rho[a] >= mu[a])) return;
            }
            ++count;
            return;
        }
        for (Rational v = lo; v <= hi; v += 1) {
            rho[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

bool same_class(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return true;
    return Rational(a[0] - b[0]).get_den() == 1;
}

// Oracle for type A dimensions: hook-content formula on the partition λ - λ_n.
long hook_content_dim(const std::vector<long>& lambda) {
    const int n = static_cast<int>(lambda.size());
    std::vector<long> part;
    for (long v : lambda) part.push_back(v - lambda.back());
    Rational num = 1, den = 1;
    for (int r = 0; r < n; ++r)
        for (long c = 0; c < part[r]; ++c) {
            long leg = 0;
            for (int rr = r + 1; rr < n && part[rr] > c; ++rr) ++leg;
            num *= Rational(n + c - r);
            den *= Rational(part[r] - c + leg);
        }
    const Rational d = num / den;
    return d.get_num().get_si();
}

Representation corrupted(const Representation& rep, GenIndex g) {
    Representation r = rep;
    r.generators.at(g).add(0, 0, 1);
    return r;
}

const std::vector<std::vector<long>> kBWeights = {{-1}, {-2}, {-5}, {0, -2}, {-1, -1}, {-2, -4},
                                                  {-1, -3}, {0, 0, -2}, {-1, -1, -1}, {-3, -3, -3}};

}  // namespace

TEST_CASE("Weyl dimension examples") {
    CHECK(weyl_dim(AlgebraType::B, halves({-2})) == 3);
    CHECK(weyl_dim(AlgebraType::B, halves({-1})) == 2);
    CHECK(weyl_dim(AlgebraType::B, halves({0, -2})) == 5);
    CHECK(weyl_dim(AlgebraType::B, halves({-1, -1})) == 4);
    CHECK(weyl_dim(AlgebraType::A, {q(2), q(1), q(0)}) == 8);
}

TEST_CASE("property: type A Weyl dimension equals the hook-content count") {
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= a; ++b)
            for (long c = 0; c <= b; ++c)
                for (long d = 0; d <= c; ++d) {
                    const std::vector<long> l{a, b, c, d};
                    CHECK(weyl_dim(AlgebraType::A, {q(a), q(b), q(c), q(d)}) == hook_content_dim(l));
                    CHECK(weyl_dim(AlgebraType::A, {q(a - 3), q(b - 3), q(c - 3), q(d - 3)}) == hook_content_dim(l));
                }
}

TEST_CASE("property: Weyl dimension equals the pattern count") {
    for (long a = 0; a >= -6; --a)
        for (long b = a; b >= -6; --b)
            for (long par : {0L, 1L}) {
                const auto w = halves({2 * a - par, 2 * b - par});
                CHECK(weyl_dim(AlgebraType::B, w) ==
                      enumerate_patterns(SoHighestWeight::from_rationals(w)).size());
            }
}

TEST_CASE("branching multiplicity examples") {
    const auto l = so_weight({0, -2});
    CHECK(branching_multiplicity(l, so_weight({0})) == 2);
    CHECK(branching_multiplicity(l, so_weight({-2})) == 1);
    CHECK(branching_multiplicity(l, so_weight({-1})) == 0);
    CHECK(branching_multiplicity(so_weight({0, 0}), so_weight({0})) == 1);
}

TEST_CASE("property: branching multiplicity against brute force and the dimension sum") {
    for (long a = 0; a >= -5; --a)
        for (long b = a; b >= -5; --b)
            for (long par : {0L, 1L}) {
                const auto lam = halves({2 * a - par, 2 * b - par});
                for (long m = 0; m >= -14; --m) {
                    const auto mu = halves({m});
                    const long want = same_class(lam, mu) ? brute_branching(lam, mu) : 0;
                    CHECK(branching_multiplicity(SoHighestWeight::from_rationals(lam),
                                                 SoHighestWeight::from_rationals({mu})) == want);
                }
                Integer total = 0;
                for (const auto& [mu, c] : branching_table(SoHighestWeight::from_rationals(lam))) {
                    std::vector<Rational> mr;
                    for (auto x : mu.entries()) mr.push_back(x.to_rational());
                    total += c * weyl_dim(AlgebraType::B, mr);
                }
                CHECK(total == weyl_dim(AlgebraType::B, lam));
            }
}

TEST_CASE("check_branching on built representations") {
    for (const auto& w : std::vector<std::vector<long>>{{0, -2}, {-1, -1}, {0, 0}, {-1, -3}, {0, 0, -2}}) {
        const auto report = check_branching(build_so(so_weight(w)));
        CHECK(report.passed());
    }
    const auto table = branching_table(so_weight({0, -2}));
    REQUIRE(table.size() == 2);
    CHECK(table[0].first == so_weight({0}));
    CHECK(table[0].second == 2);
    CHECK(table[1].first == so_weight({-2}));
    CHECK(table[1].second == 1);
}

TEST_CASE("Freudenthal examples") {
    using W = std::map<std::vector<Rational>, Integer>;
    CHECK(freudenthal_multiplicities(AlgebraType::B, halves({0, -2})) ==
          W{{{q(1), q(0)}, 1}, {{q(-1), q(0)}, 1}, {{q(0), q(1)}, 1}, {{q(0), q(-1)}, 1}, {{q(0), q(0)}, 1}});
    CHECK(freudenthal_multiplicities(AlgebraType::A, {q(1), q(0)}) == W{{{q(1), q(0)}, 1}, {{q(0), q(1)}, 1}});
    CHECK(freudenthal_multiplicities(AlgebraType::B, halves({-1})) == W{{{q(1, 2)}, 1}, {{q(-1, 2)}, 1}});
    CHECK_THROWS_AS(freudenthal_multiplicities(AlgebraType::A, {q(9), q(5), q(2), q(0)}, Integer(10)),
                    std::length_error);
}

TEST_CASE("property: Freudenthal equals the pattern weight histogram") {
    // Weights read directly from the pattern rows, independent of the library.
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= a; ++b)
            for (long c = 0; c <= b; ++c) {
                const GlHighestWeight l({q(a), q(b), q(c)});
                std::map<std::vector<Rational>, Integer> hist;
                for (const auto& p : enumerate_patterns(l)) {
                    std::vector<Rational> w;
                    Rational prev = 0;
                    for (int k = 1; k <= 3; ++k) {
                        Rational s = 0;
                        for (int i = 1; i <= k; ++i) s += p.at(k, i);
                        w.push_back(s - prev);
                        prev = s;
                    }
                    hist[w] += 1;
                }
                CHECK(freudenthal_multiplicities(AlgebraType::A, l.entries()) == hist);
            }
    for (const auto& w : kBWeights) {
        const auto rep = build_so(so_weight(w));
        CHECK(freudenthal_multiplicities(AlgebraType::B, halves(w)) == weight_histogram(rep));
    }
}

TEST_CASE("Casimir: type A closed form") {
    for (const auto& l : std::vector<std::vector<long>>{{1, 0}, {2, 1, 0}, {3, 1, 0, 0}, {0, 0, 0}, {2, 2, -1}}) {
        std::vector<Rational> w;
        for (long v : l) w.push_back(q(v));
        const auto res = casimir_scalar(build_gl(GlHighestWeight(w)));
        const long n = static_cast<long>(l.size());
        Rational want = 0;
        for (long i = 1; i <= n; ++i) want += w[i - 1] * (w[i - 1] + Rational(n + 1 - 2 * i));
        REQUIRE(res.scalar.has_value());
        CHECK(*res.scalar == want);
        CHECK(res.expected == want);
    }
}

TEST_CASE("Casimir: type B closed form in standard coordinates") {
    for (const auto& w : kBWeights) {
        const auto lam = halves(w);
        const long n = static_cast<long>(lam.size());
        Rational want = 0;
        for (long i = 1; i <= n; ++i) {
            const Rational t = -lam[n - i];
            want += 2 * t * (t + Rational(2 * n - 2 * i + 1));
        }
        const auto res = casimir_scalar(build_so(so_weight(w)));
        REQUIRE(res.scalar.has_value());
        CHECK(*res.scalar == want);
        CHECK(res.expected == want);
    }
    CHECK(*casimir_scalar(build_so(so_weight({0, 0}))).scalar == 0);
}

TEST_CASE("negative controls") {
    const auto rep = build_so(so_weight({0, -2}));
    CHECK(check_structure_constants(rep).passed());
    for (GenIndex g : {GenIndex{1, 1}, GenIndex{1, 2}, GenIndex{-1, 2}, GenIndex{0, 1}}) {
        const auto bad = corrupted(rep, g);
        const auto report = check_structure_constants(bad);
        CHECK_FALSE(report.passed());
        REQUIRE(report.first_failure() != nullptr);
        CHECK_FALSE(report.first_failure()->witness.empty());
    }
    const auto gl = build_gl(GlHighestWeight({q(2), q(1), q(0)}));
    CHECK_FALSE(check_structure_constants(corrupted(gl, GenIndex{1, 3})).passed());
    const auto casimir = casimir_scalar(corrupted(rep, GenIndex{2, 2}));
    CHECK((!casimir.scalar || *casimir.scalar != casimir.expected));
}

TEST_CASE("defining representations") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(check_structure_constants(defining_rep(AlgebraType::B, n)).passed());
        CHECK(check_structure_constants(defining_rep(AlgebraType::A, n)).passed());
        std::vector<long> w(n, 0);
        w.back() = -2;
        CHECK(intertwiner_exists(build_so(so_weight(w)), defining_rep(AlgebraType::B, n)));
        std::vector<Rational> a(n, q(0));
        a.front() = 1;
        CHECK(intertwiner_exists(build_gl(GlHighestWeight(a)), defining_rep(AlgebraType::A, n)));
    }
    const auto f = defining_rep(AlgebraType::B, 1);
    CHECK(f.gen(1, 1) == Operator::diagonal({q(-1), q(0), q(1)}));
    CHECK(f.gen(-1, 1).is_zero());
}

TEST_CASE("intertwiner rejects inequivalent modules") {
    std::string witness;
    CHECK_FALSE(intertwiner_exists(build_gl(GlHighestWeight({q(1), q(0)})),
                                   build_gl(GlHighestWeight({q(0), q(-1)})), &witness));
    CHECK_FALSE(witness.empty());
    CHECK_FALSE(intertwiner_exists(build_so(so_weight({-2})), build_so(so_weight({-1}))));
    CHECK(intertwiner_exists(build_so(so_weight({-1, -1})), build_so(so_weight({-1, -1}))));
}

TEST_CASE("z action and full reports") {
    CHECK(check_z_action(build_gl(GlHighestWeight({q(2), q(1), q(0)}))).passed());
    CHECK(verify_gl(build_gl(GlHighestWeight({q(2), q(1), q(0)})), CheckLevel::Full).passed());
    CHECK(verify_gl(build_gl(GlHighestWeight({q(1, 2), q(-1, 2)})), CheckLevel::Full).passed());
    for (const auto& w : std::vector<std::vector<long>>{{-1}, {0, -2}, {-1, -3}, {0, 0}}) {
        const auto rep = build_so(so_weight(w));
        const auto fast = verify_so(rep, CheckLevel::Fast);
        const auto full = verify_so(rep, CheckLevel::Full);
        CHECK(fast.passed());
        CHECK(full.passed());
        CHECK(full.checks.size() > fast.checks.size());
    }
}
