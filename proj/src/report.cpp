#include "hypbeta/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hypbeta {

namespace {

std::string num(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

double to_double(const std::string& s, const std::string& whole) {
    if (s.empty()) throw std::invalid_argument("bad complex number '" + whole + "'");
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad complex number '" + whole + "'");
    }
    if (used != s.size()) throw std::invalid_argument("bad complex number '" + whole + "'");
    return v;
}

nlohmann::ordered_json params_json(const std::string& id, const IdentityParams& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    const IdentityDescriptor* d = nullptr;
    for (const IdentityDescriptor& x : registry())
        if (x.id == id) d = &x;
    if (!d || d->uses_tau) j["tau"] = format_complex(p.tau);
    for (size_t k = 0; k < p.values.size(); ++k) {
        const std::string name = d && k < d->param_names.size() ? d->param_names[k] : "p" + std::to_string(k);
        j[name] = format_complex(p.values[k]);
    }
    return j;
}

}  // namespace

std::string format_complex(cplx z, int digits) {
    std::string re = num(z.real() == 0.0 ? 0.0 : z.real(), digits);
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    std::string ims = num(im, digits);
    if (ims[0] != '-') ims = "+" + ims;
    return re + ims + "i";
}

cplx parse_complex(const std::string& s0) {
    std::string s = s0;
    if (s.empty()) throw std::invalid_argument("empty complex number");
    if (s.find_first_of(" \t") != std::string::npos) throw std::invalid_argument("spaces in '" + s0 + "'");
    if (s.back() != 'i') return {to_double(s, s0), 0.0};
    s.pop_back();
    // split at the last sign that is not part of an exponent
    size_t cut = std::string::npos;
    for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    std::string re = cut == std::string::npos ? "" : s.substr(0, cut);
    std::string im = cut == std::string::npos ? s : s.substr(cut);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : to_double(re, s0), to_double(im, s0)};
}

std::vector<cplx> parse_complex_list(const std::string& s) {
    std::vector<cplx> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    if (s.back() == ',') throw std::invalid_argument("trailing comma in '" + s + "'");
    return out;
}

nlohmann::ordered_json report_row(const IdentityReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["params"] = params_json(r.id, r.params);
    j["lhs_re"] = r.lhs.real();
    j["lhs_im"] = r.lhs.imag();
    j["rhs_re"] = r.rhs.real();
    j["rhs_im"] = r.rhs.imag();
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["evals"] = r.evals;
    j["wall_ms"] = r.wall_ms;
    return j;
}

nlohmann::ordered_json error_row(const std::string& id, const IdentityParams& p, const std::string& kind,
                                 const std::string& message) {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["params"] = params_json(id, p);
    j["pass"] = false;
    j["error"] = kind;
    j["message"] = message;
    return j;
}

nlohmann::ordered_json aggregate_json(const Aggregate& a) {
    nlohmann::ordered_json j;
    j["count"] = a.count;
    j["passed"] = a.passed;
    j["failed"] = a.failed;
    j["errors"] = a.errors;
    j["rejected"] = a.rejected;
    j["max_rel_err"] = a.max_rel_err;
    j["total_wall_ms"] = a.total_wall_ms;
    return j;
}

std::string rows_to_csv(const std::vector<nlohmann::ordered_json>& rows) {
    static const char* cols[] = {"id",     "params",  "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err",
                                 "rel_err", "tol",    "pass",   "evals",  "wall_ms", "error"};
    std::string out;
    for (const char* c : cols) out += std::string(out.empty() ? "" : ",") + c;
    out += "\n";
    for (const auto& r : rows) {
        std::string line;
        for (const char* c : cols) {
            if (c != cols[0]) line += ",";
            if (!r.contains(c)) continue;
            const auto& v = r[c];
            if (std::string(c) == "params") {
                std::string p;
                for (auto it = v.begin(); it != v.end(); ++it)
                    p += (p.empty() ? "" : ";") + it.key() + "=" + it.value().get<std::string>();
                line += "\"" + p + "\"";
            } else if (v.is_string()) {
                line += v.get<std::string>();
            } else {
                line += v.dump();
            }
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace hypbeta
