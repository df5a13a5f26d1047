#include "gtbasis/lie_table.hpp"

#include "gtbasis/errors.hpp"

namespace gtb {

std::string to_string(AlgebraType t) { return t == AlgebraType::A ? "A" : "B"; }

LieTable::LieTable(AlgebraType type, int rank) : type_(type), rank_(rank) {
    const std::size_t d = defining_dim();
    const int lo = type == AlgebraType::A ? 1 : -rank;
    const int hi = rank;
    for (int i = lo; i <= hi; ++i) {
        for (int j = lo; j <= hi; ++j) {
            const GenIndex g{i, j};
            labels_.push_back(g);
            Operator m(d);
            m.add(pos(i), pos(j), 1);
            if (type == AlgebraType::B) m.add(pos(-j), pos(-i), -1);
            defining_.emplace(g, std::move(m));
            if (is_basis(g)) basis_.push_back(g);
        }
    }
}

bool LieTable::is_basis(GenIndex g) const { return type_ == AlgebraType::A || g.i + g.j > 0; }

Expansion LieTable::decompose(const Operator& m) const {
    Expansion e;
    for (const auto& [r, c, v] : m.entries()) {
        const GenIndex g{label(r), label(c)};
        if (is_basis(g)) e.emplace_back(g, v);
    }
    Operator rebuilt(defining_dim());
    for (const auto& [g, c] : e) rebuilt += defining(g).scaled(c);
    if (!(rebuilt == m)) throw ConstructionError("matrix is not in the algebra spanned by the generators");
    return e;
}

const Expansion& LieTable::bracket(GenIndex a, GenIndex b) const {
    auto key = std::make_pair(a, b);
    auto it = bracket_cache_.find(key);
    if (it != bracket_cache_.end()) return it->second;
    Expansion e = decompose(commutator(defining(a), defining(b)));
    return bracket_cache_.emplace(key, std::move(e)).first->second;
}

Expansion LieTable::expand(GenIndex g) const { return decompose(defining(g)); }

std::string LieTable::name(GenIndex g) const {
    return std::string(type_ == AlgebraType::A ? "E(" : "F(") + std::to_string(g.i) + "," + std::to_string(g.j) +
           ")";
}

std::vector<GenIndex> LieTable::cartan() const {
    std::vector<GenIndex> h;
    for (int k = 1; k <= rank_; ++k) h.push_back({k, k});
    return h;
}

Operator Representation::combine(const Expansion& e) const {
    Operator out(dim);
    for (const auto& [g, c] : e) out += gen(g).scaled(c);
    return out;
}

Representation defining_rep(AlgebraType type, int n) {
    LieTable table(type, n);
    Representation rep;
    rep.type = type;
    rep.rank = n;
    rep.dim = table.defining_dim();
    for (const auto& g : table.labels()) rep.generators.emplace(g, table.defining(g));
    // Basis vector at position p has weight e_{label(p)} (type A) or
    // sign(label) e_{|label|} (type B); the highest one is label 1 resp. n.
    rep.weights.assign(rep.dim, std::vector<Rational>(n, Rational(0)));
    for (std::size_t p = 0; p < rep.dim; ++p)
        for (int k = 1; k <= n; ++k) rep.weights[p][k - 1] = rep.gen(k, k).at(p, p);
    if (type == AlgebraType::A) {
        rep.highest_weight.assign(n, Rational(0));
        rep.highest_weight[0] = 1;
        rep.highest_index = 0;
    } else {
        // In the o(2n+1) conventions used here highest weights are
        // non-positive; the vector killed by every F_ij, i<j, is e_{-n}.
        rep.highest_weight.assign(n, Rational(0));
        rep.highest_weight[n - 1] = -1;
        rep.highest_index = 0;
    }
    return rep;
}

}  // namespace gtb
