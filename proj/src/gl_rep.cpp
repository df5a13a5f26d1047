#include "gtbasis/gl_rep.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gtbasis/errors.hpp"
#include "gtbasis/linalg.hpp"

namespace gtb {

namespace {

// E_{k,k+1} (sign = +1) or E_{k+1,k} (sign = -1) from the closed formulas.
Operator adjacent_generator(const GlRepresentation& rep, int k, int sign) {
    Operator op(rep.dim);
    for (std::size_t col = 0; col < rep.dim; ++col) {
        const GTPatternA& p = rep.basis[col];
        const auto l = l_values(p);
        const auto& lk = l[k - 1];
        for (int i = 1; i <= k; ++i) {
            auto shifted = pattern_shift(p, rep.lambda, k, i, sign);
            if (!shifted.valid) continue;
            Rational num = 1;
            Rational den = 1;
            if (sign > 0) {
                for (const auto& x : l[k]) num *= lk[i - 1] - x;
                num = -num;
            } else if (k >= 2) {
                for (const auto& x : l[k - 2]) num *= lk[i - 1] - x;
            }
            for (int j = 1; j <= k; ++j)
                if (j != i) den *= lk[i - 1] - lk[j - 1];
            const Rational c = num / den;
            if (c != 0) op.add(*rep.index.find(shifted.array), col, c);
        }
    }
    return op;
}

// Diagonal operator v ↦ Π (h_i - h_t) v over the given t.
Operator h_polynomial(const GlRepresentation& rep, int i, const std::vector<int>& ts) {
    std::vector<Rational> diag(rep.dim);
    for (std::size_t p = 0; p < rep.dim; ++p) {
        const Rational hi = rep.weights[p][i - 1] - i + 1;
        Rational prod = 1;
        for (int t : ts) prod *= hi - (rep.weights[p][t - 1] - t + 1);
        diag[p] = prod;
    }
    return Operator::diagonal(diag);
}

}  // namespace

GlRepresentation build_gl(const GlHighestWeight& lambda) {
    GlRepresentation rep(lambda);
    const int n = lambda.rank();
    rep.type = AlgebraType::A;
    rep.rank = n;
    rep.highest_weight = lambda.entries();
    rep.basis = enumerate_patterns(lambda);
    rep.index = PatternIndex<GTPatternA>(rep.basis);
    rep.dim = rep.basis.size();
    for (const auto& p : rep.basis) rep.weights.push_back(pattern_weight(p));
    rep.highest_index = rep.dim - 1;  // all rows maximal sorts last
    for (std::size_t p = 0; p < rep.dim; ++p)
        if (rep.weights[p] == lambda.entries()) rep.highest_index = p;

    for (int k = 1; k <= n; ++k) {
        std::vector<Rational> diag(rep.dim);
        for (std::size_t p = 0; p < rep.dim; ++p) diag[p] = rep.weights[p][k - 1];
        rep.generators.emplace(GenIndex{k, k}, Operator::diagonal(diag));
    }
    for (int k = 1; k < n; ++k) {
        rep.generators.emplace(GenIndex{k, k + 1}, adjacent_generator(rep, k, +1));
        rep.generators.emplace(GenIndex{k + 1, k}, adjacent_generator(rep, k, -1));
    }
    for (int dist = 2; dist < n; ++dist) {
        for (int i = 1; i + dist <= n; ++i) {
            const int j = i + dist;
            rep.generators.emplace(GenIndex{i, j}, commutator(rep.gen(i, i + 1), rep.gen(i + 1, j)));
            rep.generators.emplace(GenIndex{j, i}, commutator(rep.gen(j, j - 1), rep.gen(j - 1, i)));
        }
    }
    return rep;
}

Operator gelfand_invariant_T(const GlRepresentation& rep, const Rational& u) {
    const int n = rep.rank;
    Operator total(rep.dim);
    std::vector<bool> used(n + 1, false);
    std::function<void(int, const Operator&, int)> dfs = [&](int m, const Operator& prefix, int inversions) {
        if (m > n) {
            if (inversions % 2 == 0)
                total += prefix;
            else
                total -= prefix;
            return;
        }
        for (int r = 1; r <= n; ++r) {
            if (used[r]) continue;
            Operator factor = rep.gen(r, m);
            if (r == m) factor += Operator::identity(rep.dim).scaled(u - (m - 1));
            int added = 0;
            for (int s = r + 1; s <= n; ++s)
                if (used[s]) ++added;
            used[r] = true;
            dfs(m + 1, prefix * factor, inversions + added);
            used[r] = false;
        }
    };
    dfs(1, Operator::identity(rep.dim), 0);
    return total;
}

Rational gelfand_invariant_value(const GlHighestWeight& lambda, const Rational& u) {
    Rational v = 1;
    for (int i = 1; i <= lambda.rank(); ++i) v *= u + lambda[i] - i + 1;
    return v;
}

Operator lowering_operator_z(const GlRepresentation& rep, int i, ZDirection dir) {
    const int n = rep.rank;
    if (i < 1 || i >= n) throw std::out_of_range("z operator index out of range");
    // Indices available for the chain and for the h-polynomial.
    std::vector<int> pool;
    if (dir == ZDirection::Lowering)
        for (int t = i + 1; t < n; ++t) pool.push_back(t);
    else
        for (int t = i - 1; t >= 1; --t) pool.push_back(t);

    Operator total(rep.dim);
    const std::size_t subsets = std::size_t{1} << pool.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<int> chain;
        std::vector<int> rest;
        for (std::size_t b = 0; b < pool.size(); ++b) ((mask >> b) & 1 ? chain : rest).push_back(pool[b]);
        Operator term = Operator::identity(rep.dim);
        int prev = i;
        for (int c : chain) {
            term = term * (dir == ZDirection::Lowering ? rep.gen(c, prev) : rep.gen(prev, c));
            prev = c;
        }
        term = term * (dir == ZDirection::Lowering ? rep.gen(n, prev) : rep.gen(prev, n));
        total += term * h_polynomial(rep, i, rest);
    }
    return total;
}

std::vector<SparseVector> g_highest_vectors(const GlRepresentation& rep, const std::vector<Rational>& mu) {
    const int n = rep.rank;
    std::vector<std::size_t> columns;
    for (std::size_t p = 0; p < rep.dim; ++p) {
        if (static_cast<int>(mu.size()) == n - 1 && std::equal(mu.begin(), mu.end(), rep.weights[p].begin()))
            columns.push_back(p);
    }
    std::vector<const Operator*> ops;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b) ops.push_back(&rep.gen(a, b));
    return restricted_kernel(ops, columns);
}

long highest_pattern_for(const GlRepresentation& rep, const std::vector<Rational>& mu) {
    const int n = rep.rank;
    if (static_cast<int>(mu.size()) != n - 1) return -1;
    GTPatternA p(n);
    for (int i = 1; i <= n; ++i) p.set(n, i, rep.lambda[i]);
    for (int k = n - 1; k >= 1; --k)
        for (int i = 1; i <= k; ++i) p.set(k, i, mu[i - 1]);
    auto found = rep.index.find(p);
    return found ? static_cast<long>(*found) : -1;
}

Operator contravariant_gram(const GlRepresentation& rep) {
    const int n = rep.rank;
    std::map<std::vector<Rational>, std::vector<std::size_t>> by_weight;
    for (std::size_t p = 0; p < rep.dim; ++p) by_weight[rep.weights[p]].push_back(p);

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
    std::vector<std::pair<std::size_t, std::size_t>> var_pos;
    for (const auto& [w, idx] : by_weight)
        for (std::size_t x = 0; x < idx.size(); ++x)
            for (std::size_t y = x; y < idx.size(); ++y) {
                var.emplace(std::make_pair(idx[x], idx[y]), var_pos.size());
                var_pos.emplace_back(idx[x], idx[y]);
            }
    auto var_of = [&](std::size_t a, std::size_t b) { return var.at({std::min(a, b), std::max(a, b)}); };

    LinearSystem sys(var_pos.size());
    SparseVector norm;
    norm.emplace(var_of(rep.highest_index, rep.highest_index), 1);
    sys.add_equation(norm, 1);

    for (int k = 1; k < n; ++k) {
        const Operator& raise = rep.gen(k, k + 1);
        const Operator& lower = rep.gen(k + 1, k);
        for (std::size_t a = 0; a < rep.dim; ++a) {
            std::vector<Rational> target = rep.weights[a];
            target[k - 1] += 1;
            target[k] -= 1;
            auto it = by_weight.find(target);
            if (it == by_weight.end()) continue;
            const SparseVector up = raise.column(a);
            for (std::size_t b : it->second) {
                // (E_{k,k+1}^T G)[a,b] - (G E_{k+1,k})[a,b] = 0
                SparseVector eq;
                for (const auto& [c, v] : up) eq[var_of(c, b)] += v;
                for (const auto& [c, v] : lower.column(b)) eq[var_of(a, c)] -= v;
                std::erase_if(eq, [](const auto& kv) { return kv.second == 0; });
                if (!eq.empty()) sys.add_equation(eq, 0);
            }
        }
    }
    const auto sol = sys.solve();
    if (!sol.free_vars.empty()) throw ConstructionError("contravariant form is not unique");
    Operator g(rep.dim);
    for (const auto& [v, value] : sol.particular) {
        const auto [a, b] = var_pos[v];
        g.set(a, b, value);
        g.set(b, a, value);
    }
    return g;
}

}  // namespace gtb
