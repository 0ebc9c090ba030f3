#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "doctest.h"
#include "hypbeta/cli.hpp"
#include "hypbeta/report.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace hypbeta;
using json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("complex formatting round trip") {
    using testing::cplx;
    CHECK(format_complex(cplx(1.5, -2.0)) == "1.5-2i");
    CHECK(format_complex(cplx(0.0, 1.0)) == "0+1i");
    CHECK(parse_complex("0+1i") == cplx(0, 1));
    CHECK(parse_complex("-1.41421356") == cplx(-1.41421356, 0));
    CHECK(parse_complex("0.5i") == cplx(0, 0.5));
    CHECK(parse_complex("-i") == cplx(0, -1));
    CHECK(parse_complex("1e-3-2e-2i") == cplx(1e-3, -2e-2));
    CHECK(parse_complex_list("0.8,0.8-0.1i,1").size() == 3);
    CHECK(parse_complex_list("").empty());
    CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
    for (const char* bad : {"abc", "1+", "1 + 2i", "1+2j", "i1", "1..2", "0.8,"}) {
        INFO("input '" << std::string(bad) << "'");
        CHECK_THROWS_AS(parse_complex_list(bad), std::invalid_argument);
    }
}

TEST_CASE("verify exit codes") {
    Run r = cli({"verify", "--identity", "hyper_askey_wilson", "--tau=-1.41421356", "--params", "0.8,0.8,0.8,0.8",
                 "--tol", "1e-6"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["rows"][0]["pass"] == true);

    r = cli({"verify", "--identity", "hyper_askey_wilson", "--tau=-1.41421356", "--params", "0.5,0.5,0.5,0.5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("Re((a−3)τ)<1") != std::string::npos);
    j = json::parse(r.out);
    CHECK(j["rows"][0]["constraint"] == "Re((a−3)τ)<1");

    r = cli({"verify", "--identity", "gauss", "--tau=0+1i"});
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(std::abs(j["rows"][0]["lhs_re"].get<double>() - 1.0) < 1e-10);

    // an impossible tolerance makes the identity fail
    r = cli({"verify", "--identity", "gauss", "--tol", "1e-300"});
    CHECK(r.code == 1);
}

TEST_CASE("malformed input is a usage error") {
    const std::vector<std::vector<std::string>> cases{
        {},
        {"frobnicate"},
        {"verify"},
        {"verify", "--identity", "no_such_identity"},
        {"verify", "--identity", "gauss", "--tau", "garbage"},
        {"verify", "--identity", "hyper_ramanujan", "--params", "0.3"},
        {"verify", "--identity", "all", "--params", "0.3"},
        {"--format", "xml", "verify", "--identity", "gauss"},
        {"--jobs", "0", "verify", "--identity", "gauss"},
        {"--tol", "-1", "verify", "--identity", "gauss"},
        {"sweep", "--count", "0"},
        {"sweep", "--count", "-3", "--identity", "gauss"},
        {"sweep", "--count", "many"},
        {"eval", "nosuchfunction", "--z", "1"},
        {"eval", "gamma_h", "--aplus", "1", "--z", "0.5i"},
        {"eval", "theta", "--tau", "0+1i", "--z", "1+"},
        {"selftest", "--filter", "nothing_matches"},
        {"--config", "/nonexistent/config.ini", "verify", "--identity", "gauss"},
    };
    for (const auto& c : cases) {
        std::string joined;
        for (const auto& a : c) joined += a + " ";
        INFO(joined);
        CHECK(cli(c).code == 64);
    }
}

TEST_CASE("eval prints value and error estimate") {
    Run r = cli({"eval", "gamma_h", "--aplus", "1", "--aminus", "2", "--z", "0+0.5i"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("1.4142136+0i\n", 0) == 0);
    CHECK(r.out.find("err_est") != std::string::npos);

    r = cli({"eval", "tau_factorial", "--tau=-1.41421356", "--z", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("0+0i\n", 0) == 0);

    r = cli({"eval", "theta", "--tau", "0+1i", "--z", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("1.0864348+0i\n", 0) == 0);

    r = cli({"--format", "json", "eval", "eta", "--tau", "0+1i"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["value_re"].get<double>() == doctest::Approx(0.76822542232605666).epsilon(1e-14));

    CHECK(cli({"eval", "theta", "--tau", "0-1i", "--z", "0"}).code == 2);
    CHECK(cli({"eval", "qpoch", "--a", "0.5", "--q", "1.5"}).code == 2);
    CHECK(cli({"eval", "gamma_h", "--aplus", "1", "--aminus", "2", "--z", "0-1.5i"}).code == 2);
}

TEST_CASE("report rows keep the golden schema") {
    const Run r = cli({"--seed", "7", "sweep", "--identity", "trig_askey_wilson", "--count", "3"});
    REQUIRE(r.code == 0);
    const json got = json::parse(r.out);
    const json want = json::parse(slurp(std::string(HYPBETA_GOLDEN_DIR) + "/sweep_trig_askey_wilson_seed7.json"));
    REQUIRE(got["rows"].size() == want["rows"].size());
    const std::vector<std::string> keys{"id",     "params",  "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                                        "abs_err", "rel_err", "tol",    "pass",   "evals",  "wall_ms"};
    for (std::size_t i = 0; i < want["rows"].size(); ++i) {
        const json& g = got["rows"][i];
        const json& w = want["rows"][i];
        std::vector<std::string> gk;
        for (auto it = g.begin(); it != g.end(); ++it) gk.push_back(it.key());
        CHECK(gk == keys);
        CHECK(g["params"] == w["params"]);
        CHECK(g["pass"] == w["pass"]);
        for (const char* k : {"lhs_re", "lhs_im", "rhs_re", "rhs_im"})
            CHECK(g[k].get<double>() == doctest::Approx(w[k].get<double>()).epsilon(1e-12));
    }
    CHECK(got["aggregate"]["count"] == 3);
    CHECK(got["aggregate"]["passed"] == 3);
}

TEST_CASE("sweeps are reproducible across runs and worker counts") {
    const std::vector<std::string> base{"sweep", "--identity", "hyper_ramanujan", "--count", "20", "--seed", "1",
                                        "--tau=-1.41421356"};
    auto with_jobs = [&](const char* j) {
        std::vector<std::string> a{"--jobs", j};
        a.insert(a.end(), base.begin(), base.end());
        return cli(a);
    };
    const Run a = with_jobs("1"), b = with_jobs("4"), c = with_jobs("4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
    CHECK(json::parse(a.out)["aggregate"]["passed"] == 20);
}

TEST_CASE("csv output and output file") {
    const std::string path = "test_cli_sweep.csv";
    const Run r = cli({"--format", "csv", "--output", path, "sweep", "--identity", "gauss", "--count", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    const std::string csv = slurp(path);
    CHECK(csv.rfind("id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass,evals,wall_ms", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    std::remove(path.c_str());
}

TEST_CASE("config file supplies flags") {
    const std::string path = "test_cli_config.ini";
    {
        std::ofstream f(path);
        f << "tol = 1e-300\n";
    }
    CHECK(cli({"--config", path, "verify", "--identity", "gauss"}).code == 1);
    std::remove(path.c_str());
}

TEST_CASE("worker count falls back to the environment") {
    setenv("HYPBETA_JOBS", "3", 1);
    CHECK(default_jobs() == 3);
    setenv("HYPBETA_JOBS", "zero", 1);
    CHECK(default_jobs() >= 1);
    unsetenv("HYPBETA_JOBS");
}

TEST_CASE("selftest filter and sabotage") {
    Run r = cli({"selftest", "--filter", "hypgamma"});
    CHECK(r.code == 0);
    for (const auto& inv : json::parse(r.out)["invariants"])
        CHECK(inv["invariant"].get<std::string>().rfind("hypgamma.", 0) == 0);
    r = cli({"selftest", "--filter", "hypgamma", "--perturb", "1e-3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("hypgamma.reflection_equation") != std::string::npos);
}

TEST_CASE("installed binary returns the same statuses") {
    const std::string tool = HYPBETA_TOOL;
    auto status = [&](const std::string& args) {
        const int s = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(s);
    };
    CHECK(status("verify --identity gauss --tau=0+1i") == 0);
    CHECK(status("verify --identity hyper_askey_wilson --tau=-1.41421356 --params 0.5,0.5,0.5,0.5") == 2);
    CHECK(status("sweep --count 0") == 64);
}
