#include "gtbasis/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include "gtbasis/errors.hpp"
#include "gtbasis/io.hpp"

namespace gtb {

namespace {

struct CliConfig {
    std::string command;
    std::string type;
    int rank = 0;
    std::string weight;
    std::string format;
    std::string out;
    std::string level = "fast";
    long cap = 5000;
    bool deform_trace = false;
    bool corrupt = false;  // test hook: perturbs one generator entry before verification
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_weight(const std::string& text) {
    std::vector<Rational> w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        try {
            w.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("weight: ") + e.what());
        }
    }
    return w;
}

std::string tuple_text(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

std::vector<Rational> as_rationals(const SoHighestWeight& w) {
    std::vector<Rational> v;
    for (auto e : w.entries()) v.push_back(e.to_rational());
    return v;
}

Json strings(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

void write_output(const CliConfig& cfg, const std::string& payload, std::ostream& out) {
    if (cfg.out.empty()) {
        out << payload;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(cfg.out);
    const fs::path tmp = target.string() + ".tmp-" + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::ios_base::failure("cannot open " + tmp.string());
        f << payload;
        f.flush();
        if (!f) throw std::ios_base::failure("cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::ios_base::failure("cannot rename onto " + target.string() + ": " + ec.message());
    }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

// Admissible μ for gl(n) restricted to gl(n-1): λ_i >= μ_i >= λ_{i+1}.
std::vector<std::vector<Rational>> betweenness(const GlHighestWeight& l) {
    std::vector<std::vector<Rational>> out;
    std::vector<Rational> mu(l.rank() - 1);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > l.rank() - 1) {
            out.push_back(mu);
            return;
        }
        for (Rational v = l[i + 1]; v <= l[i]; v += 1) {
            mu[i - 1] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

int cmd_branch_A(const GlHighestWeight& l, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto mus = betweenness(l);
    if (cfg.format == "json") {
        Json j;
        Json list = Json::array();
        for (const auto& m : mus) list.push_back(strings(m));
        j["betweenness"] = std::move(list);
        write_output(cfg, dump(j), out);
    } else {
        std::string text;
        for (const auto& m : mus) text += "mu=" + tuple_text(m) + "\n";
        write_output(cfg, text, out);
    }
    err << "branch: gl(n) restriction is multiplicity-free; the admissible mu are listed and no multiplicity "
           "table is produced\n";
    return kExitInvalidInput;
}

int cmd_branch_B(const SoHighestWeight& l, const CliConfig& cfg, std::ostream& out) {
    const auto table = branching_table(l);
    const Integer dim = weyl_dim(AlgebraType::B, as_rationals(l));
    Integer sum = 0;
    std::string identity;
    for (const auto& [mu, c] : table) {
        const Integer d = weyl_dim(AlgebraType::B, as_rationals(mu));
        sum += c * d;
        identity += (identity.empty() ? "" : "+") + c.get_str() + "*" + d.get_str();
    }
    const bool ok = sum == dim;
    identity += "=" + sum.get_str();
    std::map<std::vector<Rational>, Integer> weights;
    if (l.rank() == 1) weights = freudenthal_multiplicities(AlgebraType::B, as_rationals(l));

    if (cfg.format == "json") {
        Json j;
        j["algebra"] = {{"type", "B"}, {"rank", l.rank()}};
        j["highest_weight"] = strings(as_rationals(l));
        Json rows = Json::array();
        for (const auto& [mu, c] : table)
            rows.push_back({{"mu", strings(as_rationals(mu))},
                            {"multiplicity", c.get_str()},
                            {"dimension", weyl_dim(AlgebraType::B, as_rationals(mu)).get_str()}});
        j["branching"] = std::move(rows);
        if (l.rank() == 1) {
            Json wm = Json::array();
            for (auto it = weights.rbegin(); it != weights.rend(); ++it)
                wm.push_back({{"weight", strings(it->first)}, {"multiplicity", it->second.get_str()}});
            j["weight_multiplicities"] = std::move(wm);
        }
        j["identity"] = identity;
        j["dimension"] = dim.get_str();
        j["ok"] = ok;
        write_output(cfg, dump(j), out);
    } else {
        std::string text;
        for (const auto& [mu, c] : table) text += "mu=" + tuple_text(as_rationals(mu)) + ": " + c.get_str() + "\n";
        for (auto it = weights.rbegin(); it != weights.rend(); ++it)
            text += "weight=" + tuple_text(it->first) + ": " + it->second.get_str() + "\n";
        text += identity + (ok ? " ok" : " mismatch (dimension " + dim.get_str() + ")") + "\n";
        write_output(cfg, text, out);
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

template <class Pattern>
std::string patterns_output(const std::vector<Pattern>& basis, AlgebraType type, int rank,
                            const std::vector<Rational>& hw, const std::string& format) {
    if (format == "csv") {
        std::string s = "index,weight,pattern\n";
        for (std::size_t i = 0; i < basis.size(); ++i)
            s += std::to_string(i) + "," + csv_escape(tuple_text(pattern_weight(basis[i]))) + "," +
                 csv_escape(pattern_text(basis[i])) + "\n";
        return s;
    }
    Json j;
    j["algebra"] = {{"type", to_string(type)}, {"rank", rank}};
    j["highest_weight"] = strings(hw);
    j["dimension"] = basis.size();
    Json list = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i)
        list.push_back({{"index", i}, {"weight", strings(pattern_weight(basis[i]))}, {"pattern", pattern_json(basis[i])}});
    j["patterns"] = std::move(list);
    return dump(j);
}

void print_trace(const SoRepresentation& rep, std::ostream& err) {
    for (const auto& t : rep.deform_trace)
        err << t.generator << " source=" << t.source << " target=" << t.target << " profile=" << t.profile << ": "
            << t.value << "\n";
}

int execute(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::vector<Rational> w = parse_weight(cfg.weight);
    if (static_cast<int>(w.size()) != cfg.rank)
        throw InputError("weight has " + std::to_string(w.size()) + " entries but --rank is " +
                         std::to_string(cfg.rank));
    const AlgebraType type = cfg.type == "A" ? AlgebraType::A : AlgebraType::B;
    std::optional<GlHighestWeight> gl;
    std::optional<SoHighestWeight> so;
    if (type == AlgebraType::A)
        gl.emplace(w);
    else
        so.emplace(SoHighestWeight::from_rationals(w));

    if (cfg.command == "branch") return type == AlgebraType::A ? cmd_branch_A(*gl, cfg, out, err) : cmd_branch_B(*so, cfg, out);

    const Integer dim = weyl_dim(type, w);
    if (cfg.command == "dim") {
        write_output(cfg, dim.get_str() + "\n", out);
        return kExitOk;
    }
    if (dim > cfg.cap)
        throw InputError("dimension " + dim.get_str() + " exceeds --cap " + std::to_string(cfg.cap));

    if (cfg.command == "patterns") {
        const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
        write_output(cfg,
                     type == AlgebraType::A ? patterns_output(enumerate_patterns(*gl), type, cfg.rank, w, fmt)
                                            : patterns_output(enumerate_patterns(*so), type, cfg.rank, w, fmt),
                     out);
        return kExitOk;
    }

    SoBuildOptions opts;
    opts.record_trace = cfg.deform_trace;
    const bool csv = cfg.format == "csv";
    if (cfg.command == "build") {
        if (type == AlgebraType::A) {
            const auto rep = build_gl(*gl);
            write_output(cfg, csv ? operators_csv(rep) : dump(representation_json(rep)), out);
        } else {
            const auto rep = build_so(*so, opts);
            if (cfg.deform_trace) print_trace(rep, err);
            write_output(cfg, csv ? operators_csv(rep) : dump(representation_json(rep)), out);
        }
        return kExitOk;
    }

    // verify
    const CheckLevel level = cfg.level == "full" ? CheckLevel::Full : CheckLevel::Fast;
    VerificationReport report;
    if (type == AlgebraType::A) {
        auto rep = build_gl(*gl);
        if (cfg.corrupt) rep.generators.at({1, 1}).add(0, 0, 1);
        report = verify_gl(rep, level);
    } else {
        auto rep = build_so(*so, opts);
        if (cfg.deform_trace) print_trace(rep, err);
        if (cfg.corrupt) rep.generators.at({1, 1}).add(0, 0, 1);
        report = verify_so(rep, level);
    }
    write_output(cfg, csv ? report_csv(report) : dump(report_json(report)), out);
    if (!report.passed()) {
        const Check* f = report.first_failure();
        err << "verification failed: " << f->name << ": " << f->witness << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Gelfand-Tsetlin type bases of gl(n) and o(2n+1) representations"};
    app.name("gtbasis");
    app.add_option("command", cfg.command, "dim | patterns | build | verify | branch")
        ->required()
        ->check(CLI::IsMember({"dim", "patterns", "build", "verify", "branch"}));
    app.add_option("--type", cfg.type, "A (gl(n)) or B (o(2n+1))")->required()->check(CLI::IsMember({"A", "B"}));
    app.add_option("--rank", cfg.rank, "rank n")->required()->check(CLI::PositiveNumber);
    app.add_option("--weight", cfg.weight, "highest weight, comma separated exact rationals (e.g. 0,-1/2)")
        ->required();
    app.add_option("--format", cfg.format, "json or csv (branch also accepts text)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", cfg.out, "write to this file (atomically) instead of standard output");
    app.add_option("--level", cfg.level, "verification level: fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    app.add_option("--cap", cfg.cap, "refuse to build above this dimension")->check(CLI::PositiveNumber);
    app.add_flag("--deform-trace", cfg.deform_trace, "print deformed matrix entries before specialization");
    app.add_flag("--test-corrupt", cfg.corrupt)->group("");

    // A negative weight such as "-1/2" would otherwise be read as an option.
    std::vector<std::string> args;
    for (std::size_t i = 0; i < args_in.size(); ++i) {
        if (args_in[i] == "--weight" && i + 1 < args_in.size()) {
            args.push_back("--weight=" + args_in[i + 1]);
            ++i;
        } else {
            args.push_back(args_in[i]);
        }
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitInvalidInput;
    }
    if (cfg.format == "text" && cfg.command != "branch") {
        err << "error: --format text is only available for branch\n";
        return kExitInvalidInput;
    }

    try {
        return execute(cfg, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const InvalidWeight& e) {
        err << "error: invalid highest weight: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return kExitOutputFailed;
    } catch (const ConstructionError& e) {
        err << "construction failed: " << e.what() << "\n";
        return kExitConstructionFailed;
    } catch (const PoleError& e) {
        err << "construction failed: " << e.what() << "\n";
        return kExitConstructionFailed;
    } catch (const DivisionByZero& e) {
        err << "construction failed: " << e.what() << "\n";
        return kExitConstructionFailed;
    }
}

}  // namespace gtb
