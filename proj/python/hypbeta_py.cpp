#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hypbeta/cli.hpp"
#include "hypbeta/errors.hpp"
#include "hypbeta/hypgamma.hpp"
#include "hypbeta/integrals.hpp"
#include "hypbeta/qseries.hpp"
#include "hypbeta/report.hpp"
#include "hypbeta/selftest.hpp"

namespace py = pybind11;
using namespace hypbeta;

namespace {

std::string verify_json(const std::string& id, std::optional<cplx> tau, std::optional<std::vector<cplx>> params,
                        double tol) {
    IdentityParams p = find_identity(id).defaults;
    if (tau) p.tau = *tau;
    if (params) p.values = *params;
    return report_row(evaluate_identity(id, p, tol)).dump();
}

py::tuple cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release nogil;
        code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "beta integral verification core";

    static py::exception<Error> error(m, "HypbetaError");
    static py::exception<DomainViolation> domain(m, "DomainViolation", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainViolation& e) {
            domain(e.what());
        } catch (const Error& e) {
            error(e.what());
        }
    });

    m.def("gamma_h", [](cplx ap, cplx am, cplx z) { return gamma_h({ap, am}, z); }, py::arg("a_plus"),
          py::arg("a_minus"), py::arg("z"));
    m.def("gamma_h_product", [](cplx ap, cplx am, cplx z) { return gamma_h_product({ap, am}, z); },
          py::arg("a_plus"), py::arg("a_minus"), py::arg("z"));
    m.def("tau_factorial", [](cplx z, cplx tau) { return tau_factorial(z, TauParameter(tau)); }, py::arg("z"),
          py::arg("tau"));
    m.def("elliptic_gamma", [](cplx z, cplx p1, cplx p2) { return elliptic_gamma(z, p1, p2); }, py::arg("z"),
          py::arg("p1"), py::arg("p2"));
    m.def("theta", [](cplx z, cplx tau) { return theta(z, tau).value; }, py::arg("z"), py::arg("tau"));
    m.def("eta", [](cplx tau) { return dedekind_eta(tau); }, py::arg("tau"));
    m.def("qpoch", [](cplx a, cplx q) { return qpoch_inf(a, q).value; }, py::arg("a"), py::arg("q"));

    m.def("identity_ids", &identity_ids);
    m.def("param_names", [](const std::string& id) { return find_identity(id).param_names; }, py::arg("id"));
    m.def("_verify_json", &verify_json, py::arg("id"), py::arg("tau") = std::nullopt,
          py::arg("params") = std::nullopt, py::arg("tol") = 0.0, py::call_guard<py::gil_scoped_release>());
    m.def("run_cli", &cli, py::arg("args"), "Runs the command-line tool in process; returns (status, out, err).");
    m.def("format_complex", [](cplx z) { return format_complex(z); }, py::arg("z"));
    m.def("parse_complex", &parse_complex, py::arg("s"));
}
