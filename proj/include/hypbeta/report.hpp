#pragma once

#include <string>
#include <vector>

#include "hypbeta/complex.hpp"
#include "hypbeta/integrals.hpp"
#include "json.hpp"

namespace hypbeta {

// "a+bi" with no spaces; digits significant digits per component.
std::string format_complex(cplx z, int digits = 17);
// Accepts "1", "-2.5", "0+0.5i", "0.5i", "-i", "1e-3-2e-2i". Throws std::invalid_argument.
cplx parse_complex(const std::string& s);
std::vector<cplx> parse_complex_list(const std::string& s);

// Row fields: id, params, lhs_re, lhs_im, rhs_re, rhs_im, abs_err, rel_err, tol, pass, evals, wall_ms.
nlohmann::ordered_json report_row(const IdentityReport& r);
// Row for a case that raised; carries the error kind and message instead of values.
nlohmann::ordered_json error_row(const std::string& id, const IdentityParams& p, const std::string& kind,
                                 const std::string& message);

struct Aggregate {
    long count = 0;
    long passed = 0;
    long failed = 0;
    long errors = 0;
    long rejected = 0;
    double max_rel_err = 0.0;
    double total_wall_ms = 0.0;
};
nlohmann::ordered_json aggregate_json(const Aggregate& a);

// CSV with a header line; params flattened into one quoted "name=value;..." column.
std::string rows_to_csv(const std::vector<nlohmann::ordered_json>& rows);

}  // namespace hypbeta
