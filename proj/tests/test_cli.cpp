#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gtbasis/cli.hpp"

namespace fs = std::filesystem;
using gtb::run_cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("gtbasis_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter = 0;
};

// Runs the installed binary through the shell; returns its exit status.
int run_binary(const std::string& args, const fs::path& stdout_file) {
    const std::string cmd = std::string("\"") + GTBASIS_CLI_PATH + "\" " + args + " > \"" + stdout_file.string() +
                            "\" 2> /dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("dim") {
    CHECK(cli({"dim", "--type", "B", "--rank", "2", "--weight", "0,-1"}).out == "5\n");
    CHECK(cli({"dim", "--type", "B", "--rank", "1", "--weight", "-1/2"}).out == "2\n");
    CHECK(cli({"dim", "--type", "A", "--rank", "3", "--weight", "2,1,0"}).out == "8\n");
    const auto mixed = cli({"dim", "--type", "B", "--rank", "2", "--weight", "-1,-1/2"});
    CHECK(mixed.code == 2);
    CHECK(mixed.out.empty());
    CHECK(mixed.err.find("half-integers") != std::string::npos);
}

TEST_CASE("invalid input exits 2") {
    CHECK(cli({"dim", "--type", "B", "--rank", "1", "--weight", "1"}).code == 2);
    CHECK(cli({"dim", "--type", "B", "--rank", "2", "--weight", "-1,0"}).code == 2);
    CHECK(cli({"dim", "--type", "A", "--rank", "2", "--weight", "0,1"}).code == 2);
    CHECK(cli({"dim", "--type", "A", "--rank", "2", "--weight", "1/2,0"}).code == 2);
    CHECK(cli({"dim", "--type", "A", "--rank", "3", "--weight", "1,0"}).code == 2);
    CHECK(cli({"dim", "--type", "C", "--rank", "1", "--weight", "0"}).code == 2);
    CHECK(cli({"dim", "--type", "A", "--rank", "1", "--weight", "x"}).code == 2);
    CHECK(cli({"frobnicate", "--type", "A", "--rank", "1", "--weight", "0"}).code == 2);
    CHECK(cli({"build", "--type", "A", "--rank", "4", "--weight", "9,5,2,0", "--cap", "10"}).code == 2);
}

TEST_CASE("build JSON") {
    const auto r = cli({"build", "--type", "A", "--rank", "2", "--weight", "1,0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["algebra"]["type"] == "A");
    CHECK(j["algebra"]["rank"] == 2);
    CHECK(j["dimension"] == 2);
    CHECK(j["operators"].size() == 4);
    CHECK(j["highest_weight"] == nlohmann::json::array({"1", "0"}));

    const auto b = nlohmann::json::parse(cli({"build", "--type", "B", "--rank", "1", "--weight", "-1/2"}).out);
    CHECK(b["dimension"] == 2);
    CHECK(b["operators"]["F(0,1)"]["entries"] == nlohmann::json::parse(R"([[0,1,"1/2"]])"));
    CHECK(b["operators"].contains("F(1,-1)"));

    const auto zero = nlohmann::json::parse(cli({"build", "--type", "B", "--rank", "1", "--weight", "0"}).out);
    CHECK(zero["dimension"] == 1);
    for (const auto& [name, op] : zero["operators"].items()) CHECK(op["entries"].empty());
}

TEST_CASE("build CSV") {
    const auto r = cli({"build", "--type", "B", "--rank", "1", "--weight", "-1/2", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "generator,row,col,value");
    CHECK(r.out.find("\"F(0,1)\",0,1,1/2\n") != std::string::npos);
}

TEST_CASE("patterns") {
    const auto r = cli({"patterns", "--type", "B", "--rank", "1", "--weight", "-1"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["patterns"].size() == 3);
    const auto a = nlohmann::json::parse(cli({"patterns", "--type", "A", "--rank", "3", "--weight", "2,1,0"}).out);
    CHECK(a["patterns"].size() == 8);
}

TEST_CASE("verify") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify", "--type", "B", "--rank", "2", "--weight", "-1/2,-3/2", "--level", "full"},
             {"verify", "--type", "A", "--rank", "3", "--weight", "2,1,0", "--level", "full"},
             {"verify", "--type", "B", "--rank", "1", "--weight", "-1"}}) {
        const auto r = cli(args);
        CHECK(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["summary"] == "pass");
        for (const auto& c : j["checks"]) CHECK(c["witness"].is_null());
    }
    const auto bad = cli({"verify", "--type", "B", "--rank", "2", "--weight", "0,-1", "--test-corrupt"});
    CHECK(bad.code == 1);
    const auto j = nlohmann::json::parse(bad.out);
    CHECK(j["summary"] == "fail");
    bool witnessed = false;
    for (const auto& c : j["checks"])
        if (!c["pass"].get<bool>()) witnessed = witnessed || c["witness"].is_string();
    CHECK(witnessed);
    CHECK(cli({"verify", "--type", "A", "--rank", "2", "--weight", "1,0", "--test-corrupt"}).code == 1);
    const auto csv = cli({"verify", "--type", "B", "--rank", "1", "--weight", "-1", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("name,pass,witness\n", 0) == 0);
}

TEST_CASE("branch") {
    const auto r = cli({"branch", "--type", "B", "--rank", "2", "--weight", "0,-1"});
    CHECK(r.code == 0);
    CHECK(r.out == "mu=(0): 2\nmu=(-1): 1\n2*1+1*3=5 ok\n");
    const auto one = cli({"branch", "--type", "B", "--rank", "1", "--weight", "-1"});
    CHECK(one.code == 0);
    CHECK(one.out.find("mu=(): 3") != std::string::npos);
    const auto a = cli({"branch", "--type", "A", "--rank", "2", "--weight", "1,0"});
    CHECK(a.code == 2);
    CHECK(a.out == "mu=(0)\nmu=(1)\n");
    const auto j = nlohmann::json::parse(cli({"branch", "--type", "B", "--rank", "2", "--weight", "-1/2,-1/2",
                                              "--format", "json"})
                                             .out);
    CHECK(j.dump().find("\"ok\":true") != std::string::npos);
}

TEST_CASE("deform trace goes to standard error") {
    const auto r = cli({"build", "--type", "B", "--rank", "1", "--weight", "-1/2", "--deform-trace"});
    CHECK(r.code == 0);
    CHECK_FALSE(r.err.empty());
    CHECK(r.err.find("F(0,1)") != std::string::npos);
    CHECK(r.out == cli({"build", "--type", "B", "--rank", "1", "--weight", "-1/2"}).out);
}

TEST_CASE("binary: exit codes, byte-identical output, atomic files") {
    TempDir tmp;
    const fs::path a = tmp.path / "a.json", b = tmp.path / "b.json", so = tmp.path / "stdout";
    const std::string args = "build --type B --rank 2 --weight -1/2,-3/2";
    REQUIRE(run_binary(args + " --out \"" + a.string() + "\"", so) == 0);
    REQUIRE(run_binary(args + " --out \"" + b.string() + "\"", so) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(so).empty());
    CHECK(run_binary(args, so) == 0);
    CHECK(slurp(so) == slurp(a));

    const fs::path never = tmp.path / "never.json";
    CHECK(run_binary("build --type B --rank 2 --weight -1,-1/2 --out \"" + never.string() + "\"", so) == 2);
    CHECK_FALSE(fs::exists(never));
    CHECK(run_binary("build --type B --rank 2 --weight 0,-1 --cap 3 --out \"" + never.string() + "\"", so) == 2);
    CHECK_FALSE(fs::exists(never));
    CHECK(run_binary("verify --type B --rank 1 --weight -1 --test-corrupt --out \"" + never.string() + "\"", so) == 1);
    CHECK(run_binary("build --type A --rank 1 --weight 0 --out \"" + (tmp.path / "no" / "dir.json").string() + "\"",
                     so) == 4);
    for (const auto& entry : fs::directory_iterator(tmp.path))
        CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
}
