#include "gtbasis/io.hpp"

#include <sstream>

namespace gtb {

namespace {

Json strings(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

Json algebra_json(const Representation& rep) {
    Json a;
    a["type"] = to_string(rep.type);
    a["rank"] = rep.rank;
    return a;
}

Json operators_json(const Representation& rep) {
    const LieTable table(rep.type, rep.rank);
    Json ops = Json::object();
    for (const auto& g : table.labels()) ops[table.name(g)] = operator_json(rep.gen(g));
    return ops;
}

template <class Rep>
Json rep_json(const Rep& rep) {
    Json j;
    j["algebra"] = algebra_json(rep);
    j["highest_weight"] = strings(rep.highest_weight);
    j["dimension"] = rep.dim;
    Json basis = Json::array();
    for (const auto& p : rep.basis) basis.push_back(pattern_json(p));
    j["basis"] = std::move(basis);
    j["operators"] = operators_json(rep);
    return j;
}

}  // namespace

Json operator_json(const Operator& op) {
    Json j;
    j["dim"] = op.dim();
    Json entries = Json::array();
    for (const auto& [r, c, v] : op.entries()) entries.push_back(Json::array({r, c, to_string(v)}));
    j["entries"] = std::move(entries);
    return j;
}

Json pattern_json(const GTPatternA& p) {
    Json rows = Json::array();
    for (int k = 1; k <= p.rank(); ++k) rows.push_back(strings(p.row(k)));
    Json j;
    j["rows"] = std::move(rows);
    return j;
}

Json pattern_json(const PatternB& p) {
    Json sigma = Json::array(), rows = Json::array(), primed = Json::array();
    for (int k = 1; k <= p.rank(); ++k) {
        sigma.push_back(p.sigma(k));
        Json r = Json::array(), q = Json::array();
        for (int i = 1; i <= k; ++i) {
            r.push_back(to_string(p.lam(k, i)));
            q.push_back(to_string(p.primed(k, i)));
        }
        rows.push_back(std::move(r));
        primed.push_back(std::move(q));
    }
    Json j;
    j["sigma"] = std::move(sigma);
    j["rows"] = std::move(rows);
    j["primed_rows"] = std::move(primed);
    return j;
}

Json representation_json(const GlRepresentation& rep) { return rep_json(rep); }
Json representation_json(const SoRepresentation& rep) { return rep_json(rep); }

Json report_json(const VerificationReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["witness"] = c.pass ? Json(nullptr) : Json(c.witness);
        checks.push_back(std::move(e));
    }
    Json j;
    j["checks"] = std::move(checks);
    j["summary"] = report.passed() ? "pass" : "fail";
    return j;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string operators_csv(const Representation& rep) {
    const LieTable table(rep.type, rep.rank);
    std::ostringstream os;
    os << "generator,row,col,value\n";
    for (const auto& g : table.labels())
        for (const auto& [r, c, v] : rep.gen(g).entries())
            os << csv_escape(table.name(g)) << ',' << r << ',' << c << ',' << to_string(v) << '\n';
    return os.str();
}

std::string report_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "name,pass,witness\n";
    for (const auto& c : report.checks)
        os << csv_escape(c.name) << ',' << (c.pass ? "true" : "false") << ',' << csv_escape(c.witness) << '\n';
    return os.str();
}

std::string pattern_text(const GTPatternA& p) {
    std::string s;
    for (int k = p.rank(); k >= 1; --k) {
        if (k != p.rank()) s += " | ";
        for (int i = 1; i <= k; ++i) s += (i > 1 ? " " : "") + to_string(p.at(k, i));
    }
    return s;
}

std::string pattern_text(const PatternB& p) {
    std::string s;
    for (int k = p.rank(); k >= 1; --k) {
        if (k != p.rank()) s += " | ";
        s += "s" + std::to_string(p.sigma(k)) + " [";
        for (int i = 1; i <= k; ++i) s += (i > 1 ? " " : "") + to_string(p.lam(k, i));
        s += "] [";
        for (int i = 1; i <= k; ++i) s += (i > 1 ? " " : "") + to_string(p.primed(k, i));
        s += "]";
    }
    return s;
}

}  // namespace gtb
