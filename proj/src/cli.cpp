#include "hypbeta/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "hypbeta/errors.hpp"
#include "hypbeta/hypgamma.hpp"
#include "hypbeta/integrals.hpp"
#include "hypbeta/qseries.hpp"
#include "hypbeta/report.hpp"
#include "hypbeta/selftest.hpp"

namespace hypbeta {

using nlohmann::ordered_json;

int default_jobs() {
    if (const char* e = std::getenv("HYPBETA_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(e, &end, 10);
        if (end != e && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 1024L));
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

namespace {

struct Globals {
    double tol = 0.0;
    std::string format = "json";
    bool format_given = false;
    std::string output;
    int jobs = 0;
    std::uint64_t seed = 20240611;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int status_for(const Error& e) { return is_domain_error(e.kind()) ? exit_domain : exit_numerical; }

int worse(int a, int b) {
    auto rank = [](int c) { return c == exit_numerical ? 3 : c == exit_domain ? 2 : c == exit_fail ? 1 : 0; };
    return rank(a) >= rank(b) ? a : b;
}

struct CaseResult {
    ordered_json row;
    int status = exit_ok;
    bool pass = false;
    bool error = false;
    double rel_err = 0.0;
    double wall_ms = 0.0;
};

CaseResult run_case(const std::string& id, const IdentityParams& p, double tol, bool timing) {
    CaseResult c;
    try {
        IdentityReport r = evaluate_identity(id, p, tol);
        if (!timing) r.wall_ms = 0.0;
        c.row = report_row(r);
        c.pass = r.pass;
        c.status = r.pass ? exit_ok : exit_fail;
        c.rel_err = r.rel_err;
        c.wall_ms = r.wall_ms;
    } catch (const DomainViolation& e) {
        c.row = error_row(id, p, to_string(e.kind()), e.what());
        c.row["constraint"] = e.constraint();
        c.status = exit_domain;
        c.error = true;
    } catch (const Error& e) {
        c.row = error_row(id, p, to_string(e.kind()), e.what());
        c.status = status_for(e);
        c.error = true;
    }
    return c;
}

// Evaluates the cases on `jobs` threads; results come back in input order.
std::vector<CaseResult> run_cases(const std::vector<std::pair<std::string, IdentityParams>>& cases, double tol,
                                  bool timing, int jobs) {
    std::vector<CaseResult> out(cases.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cases.size();)
            out[i] = run_case(cases[i].first, cases[i].second, tol, timing);
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

void emit(const Globals& g, const std::string& text, std::ostream& out) {
    if (g.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(g.output, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + g.output);
    f << text;
}

std::string render_rows(const Globals& g, ordered_json doc, const std::vector<ordered_json>& rows,
                        const Aggregate& a) {
    if (g.format == "csv") return rows_to_csv(rows);
    doc["rows"] = rows;
    doc["aggregate"] = aggregate_json(a);
    return doc.dump(2) + "\n";
}

int report_cases(const Globals& g, ordered_json doc, const std::vector<CaseResult>& res, long rejected,
                 std::ostream& out, std::ostream& err) {
    Aggregate a;
    a.rejected = rejected;
    std::vector<ordered_json> rows;
    int status = exit_ok;
    for (const CaseResult& c : res) {
        ++a.count;
        if (c.error) {
            ++a.errors;
            err << c.row["id"].get<std::string>() << ": " << c.row["message"].get<std::string>() << "\n";
        } else if (c.pass) {
            ++a.passed;
        } else {
            ++a.failed;
        }
        if (!c.error) a.max_rel_err = std::max(a.max_rel_err, c.rel_err);
        a.total_wall_ms += c.wall_ms;
        status = worse(status, c.status);
        rows.push_back(c.row);
    }
    emit(g, render_rows(g, std::move(doc), rows, a), out);
    return status;
}

std::vector<std::string> expand_ids(const std::string& id) {
    if (id == "all") return identity_ids();
    find_identity(id);
    return {id};
}

int cmd_verify(const Globals& g, const std::string& id, const std::optional<std::string>& tau,
               const std::optional<std::string>& params, bool timing, std::ostream& out, std::ostream& err) {
    const std::vector<std::string> ids = expand_ids(id);
    if (ids.size() > 1 && params) throw UsageError("--params needs a single --identity");
    std::vector<std::pair<std::string, IdentityParams>> cases;
    for (const std::string& i : ids) {
        IdentityParams p = find_identity(i).defaults;
        if (tau) p.tau = parse_complex(*tau);
        if (params) {
            p.values = parse_complex_list(*params);
            const std::size_t want = find_identity(i).param_names.size();
            if (p.values.size() != want)
                throw UsageError(i + " takes " + std::to_string(want) + " parameters, got " +
                                 std::to_string(p.values.size()));
        }
        cases.emplace_back(i, std::move(p));
    }
    ordered_json doc;
    doc["command"] = "verify";
    return report_cases(g, std::move(doc), run_cases(cases, g.tol, timing, g.jobs), 0, out, err);
}

int cmd_sweep(const Globals& g, const std::string& id, long count, const std::optional<std::string>& tau,
              bool timing, std::ostream& out, std::ostream& err) {
    if (count < 1) throw UsageError("--count must be at least 1");
    const std::optional<cplx> tau_override = tau ? std::optional<cplx>(parse_complex(*tau)) : std::nullopt;
    std::vector<std::pair<std::string, IdentityParams>> cases;
    long rejected = 0;
    for (const std::string& i : expand_ids(id)) {
        long rej = 0;
        for (IdentityParams& p : draw_params(find_identity(i), count, g.seed, tau_override, &rej))
            cases.emplace_back(i, std::move(p));
        rejected += rej;
    }
    ordered_json doc;
    doc["command"] = "sweep";
    doc["identity"] = id;
    doc["count"] = count;
    doc["seed"] = g.seed;
    return report_cases(g, std::move(doc), run_cases(cases, g.tol, timing, g.jobs), rejected, out, err);
}

struct EvalArgs {
    std::string function;
    std::optional<std::string> tau, z, aplus, aminus, p1, p2, a, q;
};

cplx need(const std::optional<std::string>& v, const char* flag) {
    if (!v) throw UsageError(std::string("eval needs --") + flag);
    return parse_complex(*v);
}

int cmd_eval(const Globals& g, const EvalArgs& e, std::ostream& out) {
    const double tol = g.tol > 0.0 ? g.tol : 1e-14;
    cplx v;
    double err_est = 0.0;
    if (e.function == "gamma_h") {
        const HyperbolicPair p{need(e.aplus, "aplus"), need(e.aminus, "aminus")};
        v = gamma_h(p, need(e.z, "z"), tol);
        err_est = tol * std::abs(v);
    } else if (e.function == "tau_factorial") {
        const TauParameter tp(need(e.tau, "tau"));
        v = tau_factorial(need(e.z, "z"), tp, tol);
        err_est = tol * std::abs(v);
    } else if (e.function == "elliptic_gamma") {
        v = elliptic_gamma(need(e.z, "z"), need(e.p1, "p1"), need(e.p2, "p2"), tol);
        err_est = tol * std::abs(v);
    } else if (e.function == "theta") {
        const SeriesValue s = theta(need(e.z, "z"), need(e.tau, "tau"), ThetaMethod::series, tol);
        v = s.value;
        err_est = s.trunc_err;
    } else if (e.function == "eta") {
        v = dedekind_eta(need(e.tau, "tau"), tol);
        err_est = tol * std::abs(v);
    } else if (e.function == "qpoch") {
        cplx q;
        if (e.q)
            q = parse_complex(*e.q);
        else
            q = std::exp(two_pi_i * need(e.tau, "tau"));
        const SeriesValue s = qpoch_inf(need(e.a, "a"), q, tol);
        v = s.value;
        err_est = s.trunc_err;
    } else {
        throw UsageError("unknown function " + e.function);
    }
    std::ostringstream os;
    if (g.format_given && g.format == "json") {
        ordered_json j;
        j["function"] = e.function;
        j["value"] = format_complex(v);
        j["value_re"] = v.real();
        j["value_im"] = v.imag();
        j["err_est"] = err_est;
        os << j.dump(2) << "\n";
    } else if (g.format_given && g.format == "csv") {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.3g\n", v.real(), v.imag(), err_est);
        os << "value_re,value_im,err_est\n" << buf;
    } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2g", err_est);
        os << format_complex(v, 8) << "\n" << "err_est " << buf << "\n";
    }
    emit(g, os.str(), out);
    return exit_ok;
}

int cmd_selftest(const Globals& g, SelftestOptions opt, std::ostream& out, std::ostream& err) {
    opt.seed = g.seed;
    ordered_json list = ordered_json::array();
    std::optional<InvariantResult> first_fail;
    long passed = 0, failed = 0;
    const std::vector<InvariantResult> rs = run_invariants(opt);
    if (rs.empty()) throw UsageError("no invariant matches filter '" + opt.filter + "'");
    for (const InvariantResult& r : rs) {
        ordered_json j;
        j["invariant"] = r.module + "." + r.name;
        j["residual"] = r.residual;
        j["bound"] = r.bound;
        j["pass"] = r.pass;
        if (!r.note.empty()) j["note"] = r.note;
        list.push_back(j);
        if (r.pass) {
            ++passed;
        } else {
            ++failed;
            if (!first_fail) first_fail = r;
        }
    }
    std::ostringstream os;
    if (g.format == "csv") {
        os << "invariant,residual,bound,pass\n";
        for (const InvariantResult& r : rs) {
            char buf[64];
            std::snprintf(buf, sizeof buf, ",%.3e,%.3e,", r.residual, r.bound);
            os << r.module << "." << r.name << buf << (r.pass ? "true" : "false") << "\n";
        }
    } else {
        ordered_json doc;
        doc["command"] = "selftest";
        doc["invariants"] = list;
        doc["passed"] = passed;
        doc["failed"] = failed;
        os << doc.dump(2) << "\n";
    }
    emit(g, os.str(), out);
    if (first_fail) {
        err << "invariant failed: " << first_fail->module << "." << first_fail->name << " (residual "
            << first_fail->residual << ", bound " << first_fail->bound << ")";
        if (!first_fail->note.empty()) err << ": " << first_fail->note;
        err << "\n";
        return exit_fail;
    }
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical verification of beta integrals and their summation identities", "hypbeta"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value file with the same keys as the flags");

    Globals g;
    app.add_option("--tol", g.tol, "tolerance override (0 keeps each identity's default)")->check(CLI::NonNegativeNumber);
    auto* fmt = app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", g.output, "write the report to this file");
    auto* jobs = app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "sampling seed");

    std::string id;
    std::optional<std::string> tau, params;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "check identities at given or default parameters");
    verify->add_option("--identity", id, "registry id or 'all'")->required();
    verify->add_option("--tau", tau, "tau as a+bi");
    verify->add_option("--params", params, "comma-separated complex parameters");
    verify->add_flag("--timing", timing, "keep wall-clock times in the rows");
    verify->fallthrough();

    std::string sweep_id = "all";
    long count = 10;
    std::optional<std::string> sweep_tau;
    bool sweep_timing = false;
    auto* sweep = app.add_subcommand("sweep", "seeded random draws inside identity domains");
    sweep->add_option("--identity", sweep_id, "registry id or 'all'");
    sweep->add_option("--count", count, "draws per identity");
    sweep->add_option("--tau", sweep_tau, "fix tau for every draw");
    sweep->add_flag("--timing", sweep_timing, "record wall-clock times (rows then vary between runs)");
    sweep->fallthrough();

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate one special function");
    eval->add_option("function", ev.function, "gamma_h | tau_factorial | elliptic_gamma | theta | eta | qpoch")
        ->required();
    eval->add_option("--tau", ev.tau);
    eval->add_option("--z", ev.z);
    eval->add_option("--aplus", ev.aplus);
    eval->add_option("--aminus", ev.aminus);
    eval->add_option("--p1", ev.p1);
    eval->add_option("--p2", ev.p2);
    eval->add_option("--a", ev.a);
    eval->add_option("--q", ev.q);
    eval->fallthrough();

    SelftestOptions st;
    auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
    selftest->add_option("--filter", st.filter, "module name or module.invariant prefix");
    selftest->add_option("--perturb", st.perturb, "relative error injected into one constant");
    selftest->add_option("--grid", st.grid, "random points per grid invariant")->check(CLI::PositiveNumber);
    selftest->fallthrough();

    std::vector<const char*> argv{"hypbeta"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    g.format_given = fmt->count() > 0;
    if (jobs->count() == 0) g.jobs = default_jobs();

    try {
        if (*verify) return cmd_verify(g, id, tau, params, timing, out, err);
        if (*sweep) return cmd_sweep(g, sweep_id, count, sweep_tau, sweep_timing, out, err);
        if (*eval) return cmd_eval(g, ev, out);
        return cmd_selftest(g, st, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnknownIdentity) {
            err << "usage error: " << e.what() << "\n";
            return exit_usage;
        }
        err << e.what() << "\n";
        return status_for(e);
    }
}

}  // namespace hypbeta
