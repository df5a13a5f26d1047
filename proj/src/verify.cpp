#include "gtbasis/verify.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gtbasis/errors.hpp"
#include "gtbasis/linalg.hpp"

namespace gtb {

void VerificationReport::add(std::string name, bool pass, std::string witness) {
    checks.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

namespace {

std::string vec_str(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

std::string first_difference(const Operator& got, const Operator& want) {
    const Operator d = got - want;
    const auto e = d.entries();
    if (e.empty()) return {};
    const auto& [r, c, v] = e.front();
    return "entry (" + std::to_string(r) + "," + std::to_string(c) + ") is " + to_string(got.at(r, c)) +
           ", expected " + to_string(want.at(r, c));
}

// Value of a Cartan combination on the highest weight.
Rational cartan_value(const Representation& rep, const Expansion& e) {
    Rational s = 0;
    for (const auto& [g, c] : e) {
        if (g.i != g.j || g.i < 1) throw std::logic_error("expansion is not in the Cartan subalgebra");
        s += c * rep.highest_weight[g.i - 1];
    }
    return s;
}

Integer count_in_class(HalfInt lo, HalfInt hi) {
    if (hi < lo) return 0;
    return Integer(static_cast<long>((hi.doubled() - lo.doubled()) / 2 + 1));
}

}  // namespace

VerificationReport check_structure_constants(const Representation& rep) {
    VerificationReport report;
    const LieTable table(rep.type, rep.rank);
    std::string witness;
    for (const auto& g : table.labels()) {
        const std::string d = first_difference(rep.gen(g), rep.combine(table.expand(g)));
        if (!d.empty()) {
            witness = table.name(g) + " differs from its basis expansion: " + d;
            break;
        }
    }
    report.add("generator labels agree with basis expansion (X(i,j) vs -X(-j,-i), zero slots)", witness.empty(),
               witness);
    witness.clear();
    const auto& basis = table.basis();
    for (std::size_t x = 0; x < basis.size() && witness.empty(); ++x) {
        for (std::size_t y = x + 1; y < basis.size(); ++y) {
            const Operator got = commutator(rep.gen(basis[x]), rep.gen(basis[y]));
            const Operator want = rep.combine(table.bracket(basis[x], basis[y]));
            const std::string d = first_difference(got, want);
            if (!d.empty()) {
                witness = "[" + table.name(basis[x]) + "," + table.name(basis[y]) + "]: " + d;
                break;
            }
        }
    }
    report.add("commutators match structure constants of the defining matrices", witness.empty(), witness);
    return report;
}

Integer weyl_dim(AlgebraType type, const std::vector<Rational>& lambda) {
    const int n = static_cast<int>(lambda.size());
    Rational d = 1;
    if (type == AlgebraType::A) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                d *= Rational((lambda[i - 1] - i + 1) - (lambda[j - 1] - j + 1)) / (j - i);
    } else {
        const Rational half(1, 2);
        std::vector<Rational> l(n + 1), r(n + 1);
        for (int i = 1; i <= n; ++i) {
            l[i] = -lambda[n - i] + (n - i) + half;
            r[i] = Rational(n - i) + half;
        }
        for (int i = 1; i <= n; ++i) {
            d *= l[i] / r[i];
            for (int j = i + 1; j <= n; ++j) d *= (l[i] * l[i] - l[j] * l[j]) / (r[i] * r[i] - r[j] * r[j]);
        }
    }
    if (!is_integer(d) || d < 0) throw InvalidWeight("dimension formula gave " + to_string(d));
    return d.get_num();
}

Integer branching_multiplicity(const SoHighestWeight& lambda, const SoHighestWeight& mu) {
    const int n = lambda.rank();
    if (mu.rank() != n - 1) throw std::invalid_argument("branching needs a weight of rank n-1");
    if (n == 0) return 1;
    if (mu.rank() > 0 && !mu[1].same_class(lambda[1])) return 0;
    Integer total = 1;
    for (int i = 1; i <= n; ++i) {
        HalfInt lo = lambda[i];
        HalfInt hi = i == 1 ? -lambda[1] : lambda[i - 1];
        if (i <= n - 1) {
            lo = std::max(lo, mu[i]);
            hi = std::min(hi, i == 1 ? -mu[1] : mu[i - 1]);
        } else if (n >= 2) {
            hi = std::min(hi, mu[n - 1]);
        }
        total *= count_in_class(lo, hi);
        if (total == 0) return 0;
    }
    return total;
}

std::vector<std::pair<SoHighestWeight, Integer>> branching_table(const SoHighestWeight& lambda) {
    const int n = lambda.rank();
    std::vector<std::pair<SoHighestWeight, Integer>> out;
    std::vector<HalfInt> mu(n > 0 ? n - 1 : 0);
    // μ_i ranges over [λ_{i+1}, min(0, λ_{i-1})] with λ_0 = -λ_1, non-increasing.
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n - 1) {
            SoHighestWeight m(mu);
            Integer c = branching_multiplicity(lambda, m);
            if (c > 0) out.emplace_back(std::move(m), c);
            return;
        }
        HalfInt hi = std::min(HalfInt(), i == 1 ? -lambda[1] : lambda[i - 1]);
        if (!hi.same_class(lambda[1])) hi = hi - HalfInt::from_doubled(1);
        if (i > 1) hi = std::min(hi, mu[i - 2]);
        for (HalfInt v = hi; v >= lambda[i + 1]; v = v - 1) {
            mu[i - 1] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

VerificationReport check_branching(const SoRepresentation& rep) {
    VerificationReport report;
    const int n = rep.rank;
    if (n < 2) {
        report.add("branching to the rank n-1 subalgebra", true);
        return report;
    }
    std::map<std::vector<Rational>, std::vector<std::size_t>> by_mu;
    for (std::size_t c = 0; c < rep.dim; ++c)
        by_mu[std::vector<Rational>(rep.weights[c].begin(), rep.weights[c].end() - 1)].push_back(c);
    std::vector<const Operator*> ops;
    for (int i = -n + 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) ops.push_back(&rep.gen(i, j));

    std::string witness;
    for (const auto& [mu, cols] : by_mu) {
        const Integer found = static_cast<long>(restricted_kernel(ops, cols).size());
        Integer expected = 0;
        try {
            expected = branching_multiplicity(rep.lambda, SoHighestWeight::from_rationals(mu));
        } catch (const InvalidWeight&) {
            expected = 0;
        }
        if (found != expected) {
            witness = "mu=" + vec_str(mu) + ": " + found.get_str() + " highest vectors, c(mu)=" + expected.get_str();
            break;
        }
    }
    report.add("highest-vector counts per mu equal c(mu)", witness.empty(), witness);

    Integer sum = 0;
    for (const auto& [mu, c] : branching_table(rep.lambda)) {
        std::vector<Rational> m;
        for (auto e : mu.entries()) m.push_back(e.to_rational());
        sum += c * weyl_dim(AlgebraType::B, m);
    }
    report.add("sum of c(mu) * dim V'(mu) equals dim V(lambda)", sum == static_cast<long>(rep.dim),
               "sum " + sum.get_str() + " vs dimension " + std::to_string(rep.dim));
    return report;
}

CasimirResult casimir_scalar(const Representation& rep) {
    const LieTable table(rep.type, rep.rank);
    CasimirResult res;
    Operator c(rep.dim);
    for (const auto& g : table.labels()) c += rep.gen(g) * rep.gen(g.j, g.i);
    res.scalar = c.scalar_value();
    if (!res.scalar) {
        for (const auto& [r, col, v] : c.entries())
            if (r != col || v != c.at(0, 0)) {
                res.witness = "entry (" + std::to_string(r) + "," + std::to_string(col) + ") = " + to_string(v);
                break;
            }
    }
    // On the highest vector: Σ_i X_ii² + Σ_{i<j} [X_ij, X_ji].
    Rational expected = 0;
    for (const auto& g : table.labels()) {
        if (g.i == g.j) {
            const Rational w = cartan_value(rep, table.expand(g));
            expected += w * w;
        } else if (g.i < g.j) {
            expected += cartan_value(rep, table.bracket(g, GenIndex{g.j, g.i}));
        }
    }
    res.expected = expected;
    return res;
}

namespace {

// Standard coordinates: type A as given, type B w̃_i = -w_{n+1-i} so that
// dominant means w̃_1 >= ... >= w̃_n >= 0.
std::vector<Rational> to_standard(AlgebraType type, const std::vector<Rational>& w) {
    if (type == AlgebraType::A) return w;
    std::vector<Rational> s(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) s[i] = -w[w.size() - 1 - i];
    return s;
}

std::vector<Rational> dominant_of(AlgebraType type, std::vector<Rational> w) {
    if (type == AlgebraType::B)
        for (auto& x : w) x = abs(x);
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
}

std::vector<std::vector<Rational>> positive_roots(AlgebraType type, int n) {
    std::vector<std::vector<Rational>> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Rational> a(n, Rational(0));
            a[i] = 1;
            a[j] = -1;
            roots.push_back(a);
            if (type == AlgebraType::B) {
                a[j] = 1;
                roots.push_back(a);
            }
        }
    if (type == AlgebraType::B)
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> a(n, Rational(0));
            a[i] = 1;
            roots.push_back(a);
        }
    return roots;
}

// Simple-root coordinates of λ - μ, or nothing if μ is not below λ.
std::optional<Rational> height_below(AlgebraType type, const std::vector<Rational>& lambda,
                                     const std::vector<Rational>& mu) {
    Rational partial = 0, height = 0;
    const std::size_t n = lambda.size();
    for (std::size_t i = 0; i < n; ++i) {
        partial += lambda[i] - mu[i];
        if (!is_integer(partial) || partial < 0) return std::nullopt;
        if (type == AlgebraType::A && i + 1 == n) {
            if (partial != 0) return std::nullopt;
        } else {
            height += partial;
        }
    }
    return height;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& k = 1) {
    std::vector<Rational> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + k * b[i];
    return s;
}

}  // namespace

std::map<std::vector<Rational>, Integer> freudenthal_multiplicities(AlgebraType type, const std::vector<Rational>& lambda_in,
                                                                    const Integer& cap) {
    const int n = static_cast<int>(lambda_in.size());
    if (weyl_dim(type, lambda_in) > cap) throw std::length_error("dimension exceeds the cap");
    const std::vector<Rational> lambda = to_standard(type, lambda_in);
    const auto roots = positive_roots(type, n);
    std::vector<Rational> rho(n);
    for (int i = 0; i < n; ++i) rho[i] = type == AlgebraType::A ? Rational(n - 1 - i) : Rational(2 * (n - i) - 1, 2);

    // Dominant weights below λ, by breadth-first search over root subtractions.
    std::set<std::vector<Rational>> dominant{lambda};
    std::deque<std::vector<Rational>> queue{lambda};
    while (!queue.empty()) {
        const auto w = queue.front();
        queue.pop_front();
        for (const auto& a : roots) {
            auto v = add(w, a, -1);
            if (dominant_of(type, v) != v || !height_below(type, lambda, v) || dominant.count(v)) continue;
            dominant.insert(v);
            queue.push_back(v);
        }
    }
    std::vector<std::pair<Rational, std::vector<Rational>>> order;
    for (const auto& w : dominant) order.emplace_back(*height_below(type, lambda, w), w);
    std::sort(order.begin(), order.end());

    std::map<std::vector<Rational>, Integer> mult;
    const Rational top = dot(add(lambda, rho), add(lambda, rho));
    for (const auto& [h, mu] : order) {
        if (h == 0) {
            mult[mu] = 1;
            continue;
        }
        Rational sum = 0;
        for (const auto& a : roots) {
            for (int k = 1;; ++k) {
                const auto v = add(mu, a, k);
                auto it = mult.find(dominant_of(type, v));
                if (it == mult.end()) break;
                sum += Rational(it->second) * dot(v, a);
            }
        }
        const Rational denom = top - dot(add(mu, rho), add(mu, rho));
        const Rational m = 2 * sum / denom;
        if (!is_integer(m)) throw std::logic_error("non-integral weight multiplicity");
        if (m != 0) mult[mu] = m.get_num();
    }

    // Spread over the Weyl group orbit and return to pattern coordinates.
    std::map<std::vector<Rational>, Integer> out;
    for (const auto& [mu, m] : mult) {
        std::vector<Rational> w = mu;
        std::sort(w.begin(), w.end());
        std::set<std::vector<Rational>> orbit;
        do {
            if (type == AlgebraType::A) {
                orbit.insert(w);
            } else {
                for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                    auto s = w;
                    for (int i = 0; i < n; ++i)
                        if ((mask >> i) & 1) s[i] = -s[i];
                    orbit.insert(s);
                }
            }
        } while (std::next_permutation(w.begin(), w.end()));
        for (const auto& o : orbit) out[to_standard(type, o)] = m;  // to_standard is an involution
    }
    return out;
}

std::map<std::vector<Rational>, Integer> weight_histogram(const Representation& rep) {
    std::map<std::vector<Rational>, Integer> h;
    for (const auto& w : rep.weights) h[w] += 1;
    return h;
}

bool intertwiner_exists(const Representation& a, const Representation& b, std::string* witness) {
    auto fail = [&](const std::string& msg) {
        if (witness) *witness = msg;
        return false;
    };
    if (a.type != b.type || a.rank != b.rank) return fail("different algebras");
    if (a.dim != b.dim) return fail("dimensions differ");
    const std::size_t N = a.dim;
    const LieTable table(a.type, a.rank);
    RowReducer rr(N * N);
    // (T A_g - B_g T)[r,c] = Σ_m T[r,m] A[m,c] - Σ_m B[r,m] T[m,c]
    for (const auto& g : table.basis()) {
        const Operator& A = a.gen(g);
        const Operator& B = b.gen(g);
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) {
                SparseVector eq;
                for (const auto& [m, v] : A.column(c)) eq[r * N + m] += v;
                for (const auto& [m, v] : B.row(r)) eq[m * N + c] -= v;
                std::erase_if(eq, [](const auto& kv) { return kv.second == 0; });
                if (!eq.empty()) rr.add_row(std::move(eq));
            }
    }
    const auto kernel = rr.kernel_basis();
    if (kernel.empty()) return fail("only the zero map intertwines");
    SparseVector t;
    for (std::size_t idx = 0; idx < kernel.size(); ++idx) axpy(t, Rational(static_cast<long>(idx + 1)), kernel[idx]);
    RowReducer rank(N);
    for (std::size_t r = 0; r < N; ++r) {
        SparseVector row;
        for (const auto& [pos, v] : t)
            if (pos / N == r) row.emplace(pos % N, v);
        rank.add_row(std::move(row));
    }
    if (rank.rank() != N) return fail("intertwiner has rank " + std::to_string(rank.rank()));
    return true;
}

VerificationReport check_z_action(const GlRepresentation& rep) {
    VerificationReport report;
    const int n = rep.rank;
    if (n < 2) {
        report.add("z_in on subalgebra-highest vectors", true);
        return report;
    }
    std::set<std::vector<Rational>> mus;
    for (const auto& p : rep.basis) mus.insert(p.row(n - 1));
    std::vector<Operator> z;
    for (int i = 1; i < n; ++i) z.push_back(lowering_operator_z(rep, i, ZDirection::Raising));

    std::string witness;
    for (const auto& mu : mus) {
        const long hv = highest_pattern_for(rep, mu);
        bool highest = hv >= 0;
        for (int a = 1; a < n && highest; ++a)
            for (int b = a + 1; b < n && highest; ++b)
                if (!rep.gen(a, b).column(hv).empty()) highest = false;
        if (!highest || g_highest_vectors(rep, mu).size() != 1) {
            witness = "mu=" + vec_str(mu) + ": subalgebra-highest space is not spanned by its pattern";
            break;
        }
        for (int i = 1; i < n && witness.empty(); ++i) {
            const SparseVector got = z[i - 1].column(hv);
            SparseVector want;
            if (mu[i - 1] != rep.lambda[i]) {
                auto up = mu;
                up[i - 1] += 1;
                const long target = highest_pattern_for(rep, up);
                Rational c = -1;
                const Rational m = mu[i - 1] - i + 1;
                for (int j = 1; j <= n; ++j) c *= m - (rep.lambda[j] - j + 1);
                if (target < 0) {
                    witness = "mu=" + vec_str(mu) + ", i=" + std::to_string(i) + ": shifted pattern missing";
                    break;
                }
                if (c != 0) want.emplace(static_cast<std::size_t>(target), c);
            }
            if (got != want)
                witness = "mu=" + vec_str(mu) + ", i=" + std::to_string(i) + ": z_in image differs";
        }
        if (!witness.empty()) break;
    }
    report.add("z_in xi_mu = -prod_j (m_i - l_j) xi_(mu+delta_i)", witness.empty(), witness);
    return report;
}

namespace {

void merge(VerificationReport& into, const VerificationReport& from) {
    into.checks.insert(into.checks.end(), from.checks.begin(), from.checks.end());
}

void common_checks(VerificationReport& r, const Representation& rep, std::size_t pattern_count) {
    merge(r, check_structure_constants(rep));
    const Integer wd = weyl_dim(rep.type, rep.highest_weight);
    r.add("pattern count equals Weyl dimension", wd == static_cast<long>(pattern_count),
          std::to_string(pattern_count) + " patterns, Weyl dimension " + wd.get_str());

    std::string witness;
    for (int k = 1; k <= rep.rank && witness.empty(); ++k) {
        const Operator& h = rep.gen(k, k);
        if (!h.is_diagonal()) witness = "X(" + std::to_string(k) + "," + std::to_string(k) + ") is not diagonal";
        for (std::size_t c = 0; c < rep.dim && witness.empty(); ++c)
            if (h.at(c, c) != rep.weights[c][k - 1])
                witness = "basis vector " + std::to_string(c) + " has the wrong weight in slot " + std::to_string(k);
    }
    r.add("Cartan generators diagonal with pattern weights", witness.empty(), witness);

    witness.clear();
    const LieTable table(rep.type, rep.rank);
    for (const auto& g : table.labels())
        if (g.i < g.j && !rep.gen(g).column(rep.highest_index).empty()) {
            witness = table.name(g) + " does not kill the highest vector";
            break;
        }
    r.add("highest vector annihilated by raising generators", witness.empty(), witness);
}

void full_common(VerificationReport& r, const Representation& rep) {
    const auto cas = casimir_scalar(rep);
    r.add("quadratic Casimir is scalar", cas.scalar.has_value(), cas.witness);
    r.add("Casimir scalar matches highest-vector value", cas.scalar && *cas.scalar == cas.expected,
          cas.scalar ? to_string(*cas.scalar) + " vs " + to_string(cas.expected) : "not scalar");
    const auto fr = freudenthal_multiplicities(rep.type, rep.highest_weight);
    const auto hist = weight_histogram(rep);
    std::string witness;
    if (fr != hist) {
        for (const auto& [w, m] : fr) {
            auto it = hist.find(w);
            if (it == hist.end() || it->second != m) {
                witness = "weight " + vec_str(w) + ": Freudenthal " + m.get_str() + ", patterns " +
                          (it == hist.end() ? std::string("0") : it->second.get_str());
                break;
            }
        }
        if (witness.empty()) witness = "patterns carry weights outside the Freudenthal support";
    }
    r.add("weight histogram equals Freudenthal multiplicities", witness.empty(), witness);
}

}  // namespace

VerificationReport verify_gl(const GlRepresentation& rep, CheckLevel level) {
    VerificationReport r;
    common_checks(r, rep, rep.basis.size());
    if (level == CheckLevel::Fast) return r;
    full_common(r, rep);

    if (rep.rank <= 5) {
        std::string witness;
        for (const Rational u : {Rational(0), Rational(1), Rational(-1), Rational(7)}) {
            const Rational want = gelfand_invariant_value(rep.lambda, u);
            if (!(gelfand_invariant_T(rep, u) == Operator::identity(rep.dim).scaled(want))) {
                witness = "u=" + to_string(u) + ": T(u) is not " + to_string(want) + " * Id";
                break;
            }
        }
        r.add("T(u) = prod_i (u + l_i) Id for u in {0,1,-1,7}", witness.empty(), witness);
    }

    std::string witness;
    try {
        const Operator g = contravariant_gram(rep);
        if (!g.is_diagonal()) witness = "Gram matrix is not diagonal";
        for (std::size_t c = 0; c < rep.dim && witness.empty(); ++c)
            if (g.at(c, c) == 0) witness = "Gram entry " + std::to_string(c) + " vanishes";
        for (int i = 1; i <= rep.rank && witness.empty(); ++i)
            for (int j = 1; j <= rep.rank && witness.empty(); ++j)
                if (!(rep.gen(i, j).transposed() * g == g * rep.gen(j, i)))
                    witness = "adjointness fails for E(" + std::to_string(i) + "," + std::to_string(j) + ")";
    } catch (const std::exception& e) {
        witness = e.what();
    }
    r.add("contravariant form diagonal, nonsingular, adjoint", witness.empty(), witness);
    merge(r, check_z_action(rep));
    return r;
}

VerificationReport verify_so(const SoRepresentation& rep, CheckLevel level) {
    VerificationReport r;
    common_checks(r, rep, rep.basis.size());
    if (level == CheckLevel::Fast) return r;
    full_common(r, rep);
    merge(r, check_branching(rep));
    r.add("quadratic expression for Phi(-k,k) matches its closed form on subalgebra-highest vectors",
          phi_definition_check(rep), "mismatch");
    return r;
}

}  // namespace gtb
