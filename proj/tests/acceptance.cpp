// Acceptance run over the full weight corpus. Prints one PASS/FAIL line per
// criterion and exits non-zero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "gtbasis/errors.hpp"
#include "gtbasis/gl_rep.hpp"
#include "gtbasis/io.hpp"
#include "gtbasis/so_rep.hpp"
#include "gtbasis/verify.hpp"

using namespace gtb;

namespace {

constexpr long kMaxDim = 200;

struct Criterion {
    std::string title;
    bool pass = true;
    long cases = 0;
    std::string witness;

    void record(bool ok, const std::string& what) {
        ++cases;
        if (!ok && pass) {
            pass = false;
            witness = what;
        }
    }
};

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string show(const std::vector<Rational>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
    return s + ")";
}

std::vector<Rational> rationals(const SoHighestWeight& w) {
    std::vector<Rational> out;
    for (auto x : w.entries()) out.push_back(x.to_rational());
    return out;
}

// Dominant weights are generated from non-negative gaps between consecutive
// entries. The dimension grows with every gap, so each loop stops at the
// first gap that overshoots.
void for_each_gap_vector(int n, const std::function<bool(const std::vector<long>&)>& accept) {
    std::vector<long> gaps(n, 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) return accept(gaps);
        bool any = false;
        for (gaps[i] = 0;; ++gaps[i]) {
            if (!rec(i + 1)) break;
            any = true;
        }
        gaps[i] = 0;
        return any;
    };
    rec(0);
}

std::vector<std::vector<Rational>> type_a_corpus() {
    std::vector<std::vector<Rational>> out;
    for (int n = 1; n <= 4; ++n) {
        // λ_n = 0; gaps[i] = λ_{i+1} - λ_{i+2} for i < n-1.
        for_each_gap_vector(n - 1, [&](const std::vector<long>& gaps) {
            std::vector<Rational> w(n, q(0));
            for (int i = n - 2; i >= 0; --i) w[i] = w[i + 1] + Rational(gaps[i]);
            if (weyl_dim(AlgebraType::A, w) > kMaxDim) return false;
            out.push_back(w);
            return true;
        });
    }
    // A few weights off the λ_n = 0 normalization.
    out.push_back({q(1, 2), q(-1, 2)});
    out.push_back({q(5, 2), q(1, 2), q(-1, 2)});
    out.push_back({q(-1), q(-1), q(-2)});
    out.push_back({q(3), q(3), q(1), q(-2)});
    return out;
}

std::vector<SoHighestWeight> type_b_corpus() {
    std::vector<SoHighestWeight> out;
    for (int n = 1; n <= 3; ++n)
        for (long half : {0L, 1L}) {
            // λ_1 = -half/2 - gaps[0]; λ_{i+1} = λ_i - gaps[i].
            for_each_gap_vector(n, [&](const std::vector<long>& gaps) {
                std::vector<HalfInt> w(n);
                HalfInt cur = HalfInt::from_doubled(-half);
                for (int i = 0; i < n; ++i) {
                    cur = cur - HalfInt::integer(gaps[i]);
                    w[i] = cur;
                }
                SoHighestWeight lam(w);
                if (weyl_dim(AlgebraType::B, rationals(lam)) > kMaxDim) return false;
                out.push_back(lam);
                return true;
            });
        }
    return out;
}

bool contains(const std::vector<std::vector<Rational>>& corpus, const std::vector<Rational>& w) {
    return std::find(corpus.begin(), corpus.end(), w) != corpus.end();
}

void check_gram(const GlRepresentation& rep, Criterion& c, const std::string& tag) {
    try {
        const Operator g = contravariant_gram(rep);
        bool ok = g.is_diagonal();
        for (std::size_t i = 0; ok && i < rep.dim; ++i) ok = g.at(i, i) != 0;
        for (int i = 1; ok && i <= rep.rank; ++i)
            for (int j = 1; ok && j <= rep.rank; ++j) ok = rep.gen(i, j).transposed() * g == g * rep.gen(j, i);
        c.record(ok, tag + ": Gram matrix not diagonal, singular, or not adjoint");
    } catch (const std::exception& e) {
        c.record(false, tag + ": " + e.what());
    }
}

void check_casimir(const Representation& rep, Criterion& c, const std::string& tag) {
    const auto cas = casimir_scalar(rep);
    c.record(cas.scalar && *cas.scalar == cas.expected,
             tag + ": " + (cas.scalar ? "scalar " + to_string(*cas.scalar) + " vs " + to_string(cas.expected)
                                      : "not scalar, " + cas.witness));
}

void check_weights(const Representation& rep, Criterion& c, const std::string& tag) {
    c.record(freudenthal_multiplicities(rep.type, rep.highest_weight) == weight_histogram(rep),
             tag + ": weight histogram differs from Freudenthal");
}

void check_structure(const Representation& rep, Criterion& c, const std::string& tag) {
    const auto report = check_structure_constants(rep);
    const Check* bad = report.first_failure();
    c.record(report.passed(), tag + ": " + (bad ? bad->name + ": " + bad->witness : std::string()));
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    std::array<Criterion, 11> crit{{
        {"worked example: rank one, highest weight -1/2"},
        {"commutators match runtime structure constants"},
        {"pattern count equals Weyl dimension"},
        {"branching: highest-vector counts and dimension sum"},
        {"T(u) scalar at u = 0, 1, -1, 7"},
        {"z_in action on subalgebra-highest vectors for (2,1,0)"},
        {"contravariant form diagonal, nonsingular, adjoint"},
        {"quadratic Casimir is scalar"},
        {"equivalence with the defining representation"},
        {"weight histogram equals Freudenthal"},
        {"deterministic builds; deformed and fast paths agree"},
    }};

    const auto a_corpus = type_a_corpus();
    const auto b_corpus = type_b_corpus();
    std::vector<std::vector<Rational>> b_rational;
    for (const auto& w : b_corpus) b_rational.push_back(rationals(w));

    // Named weights must be part of the corpus.
    for (const auto& w : std::vector<std::vector<Rational>>{{q(1), q(0)}, {q(2), q(1), q(0)}, {q(3), q(1), q(0), q(0)}})
        crit[1].record(contains(a_corpus, w), "corpus misses A" + show(w));
    for (const auto& w : std::vector<std::vector<Rational>>{{q(-1)},
                                                            {q(-1, 2)},
                                                            {q(0), q(-1)},
                                                            {q(-1, 2), q(-1, 2)},
                                                            {q(-1), q(-2)},
                                                            {q(-1, 2), q(-3, 2)},
                                                            {q(0), q(0), q(-1)},
                                                            {q(-1, 2), q(-1, 2), q(-1, 2)}})
        crit[1].record(contains(b_rational, w), "corpus misses B" + show(w));

    // Dimension examples.
    for (const auto& [w, d] : std::vector<std::pair<std::vector<Rational>, long>>{
             {{q(-1)}, 3}, {{q(-1, 2)}, 2}, {{q(0), q(-1)}, 5}, {{q(-1, 2), q(-1, 2)}, 4}}) {
        const auto n = enumerate_patterns(SoHighestWeight::from_rationals(w)).size();
        crit[2].record(n == static_cast<std::size_t>(d) && weyl_dim(AlgebraType::B, w) == d,
                       "B" + show(w) + " expected " + std::to_string(d));
    }
    crit[2].record(enumerate_patterns(GlHighestWeight({q(2), q(1), q(0)})).size() == 8, "A(2,1,0) expected 8");

    // 1. Worked example.
    {
        const auto rep = build_so(SoHighestWeight::from_rationals({q(-1, 2)}));
        PatternB xi(1), xi_prime(1);
        xi.set_lam(1, 1, HalfInt::from_doubled(-1));
        xi.set_primed(1, 1, HalfInt::from_doubled(-1));
        xi_prime = xi.flipped_sigma(1);
        const auto a = rep.index.find(xi), b = rep.index.find(xi_prime);
        bool ok = a && b && rep.dim == 2;
        if (ok) {
            ok = rep.gen(0, 1).column(*b) == SparseVector{{*a, q(1, 2)}} && rep.gen(0, 1).column(*a).empty() &&
                 rep.phi_minus.at(0).is_zero();
        }
        crit[0].record(ok, "F(0,1) xi' != xi/2 or Phi(-1,1) non-zero");
    }

    // 9. Defining representation.
    for (int n = 1; n <= 3; ++n) {
        std::vector<Rational> w(n, q(0));
        w.back() = -1;
        std::string why;
        const bool ok = intertwiner_exists(build_so(SoHighestWeight::from_rationals(w)),
                                           defining_rep(AlgebraType::B, n), &why);
        crit[8].record(ok, "n=" + std::to_string(n) + ": " + why);
    }

    for (const auto& w : a_corpus) {
        const std::string tag = "A" + show(w);
        try {
            const GlHighestWeight lam(w);
            const auto rep = build_gl(lam);
            check_structure(rep, crit[1], tag);
            crit[2].record(weyl_dim(AlgebraType::A, w) == rep.dim && rep.basis.size() == rep.dim, tag);
            for (long u : {0L, 1L, -1L, 7L}) {
                const Rational uu(u);
                crit[4].record(gelfand_invariant_T(rep, uu) ==
                                   Operator::identity(rep.dim).scaled(gelfand_invariant_value(lam, uu)),
                               tag + " u=" + std::to_string(u));
            }
            if (w == std::vector<Rational>{q(2), q(1), q(0)}) {
                const auto report = check_z_action(rep);
                const Check* bad = report.first_failure();
                crit[5].record(report.passed(), bad ? bad->witness : "");
            }
            check_gram(rep, crit[6], tag);
            check_casimir(rep, crit[7], tag);
            check_weights(rep, crit[9], tag);
            crit[10].record(representation_json(rep).dump() == representation_json(build_gl(lam)).dump(),
                            tag + ": repeated build differs");
        } catch (const std::exception& e) {
            crit[1].record(false, tag + ": " + e.what());
        }
    }

    for (const auto& lam : b_corpus) {
        const auto w = rationals(lam);
        const std::string tag = "B" + show(w);
        try {
            const auto rep = build_so(lam);
            check_structure(rep, crit[1], tag);
            crit[2].record(weyl_dim(AlgebraType::B, w) == rep.dim && rep.basis.size() == rep.dim, tag);
            if (lam.rank() >= 2) {
                const auto report = check_branching(rep);
                const Check* bad = report.first_failure();
                crit[3].record(report.passed(), tag + ": " + (bad ? bad->witness : std::string()));
            }
            check_casimir(rep, crit[7], tag);
            check_weights(rep, crit[9], tag);

            SoBuildOptions forced;
            forced.force_deformation = true;
            const auto slow = build_so(lam, forced);
            crit[10].record(slow.generators == rep.generators, tag + ": deformed path differs from fast path");
            crit[10].record(representation_json(rep).dump() == representation_json(slow).dump(),
                            tag + ": serialized builds differ");
        } catch (const std::exception& e) {
            crit[1].record(false, tag + ": " + e.what());
        }
    }

    // Repeated fast builds for the named weights.
    for (const auto& w : std::vector<std::vector<Rational>>{{q(-1, 2)}, {q(0), q(-1)}, {q(-1, 2), q(-3, 2)}}) {
        const auto lam = SoHighestWeight::from_rationals(w);
        crit[10].record(representation_json(build_so(lam)).dump() == representation_json(build_so(lam)).dump(),
                        "B" + show(w) + ": repeated build differs");
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "corpus: " << a_corpus.size() << " type A weights, " << b_corpus.size()
              << " type B weights (dimension <= " << kMaxDim << "), " << static_cast<long>(secs) << " s\n";
    bool all = true;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        const auto& c = crit[i];
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << c.title << " (" << c.cases
                  << " cases)\n";
        if (!c.pass) std::cout << "      first failure: " << c.witness << "\n";
        all = all && c.pass;
    }
    return all ? 0 : 1;
}
