#include "hypbeta/integrals.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "hypbeta/errors.hpp"
#include "hypbeta/hypgamma.hpp"
#include "hypbeta/qseries.hpp"

namespace hypbeta {

const char* to_string(IdentityClass c) {
    switch (c) {
        case IdentityClass::trigonometric: return "trigonometric";
        case IdentityClass::elliptic: return "elliptic";
        case IdentityClass::hyperbolic: return "hyperbolic";
        case IdentityClass::limit: return "limit";
        case IdentityClass::calibration: return "calibration";
    }
    return "?";
}

const IdentityDescriptor& find_identity(const std::string& id) {
    for (const IdentityDescriptor& d : registry())
        if (d.id == id) return d;
    raise(ErrorKind::UnknownIdentity, "unknown identity '" + id + "'");
}

std::vector<std::string> identity_ids() {
    std::vector<std::string> out;
    for (const IdentityDescriptor& d : registry()) out.push_back(d.id);
    return out;
}

namespace {

void require_arity(const IdentityDescriptor& d, const IdentityParams& p) {
    if (p.values.size() != d.param_names.size())
        raise(ErrorKind::ParameterOutOfRange, d.id + " takes " + std::to_string(d.param_names.size()) +
                                                  " parameters, got " + std::to_string(p.values.size()));
}

double rel_or_abs(double abs_err, cplx rhs) { return std::abs(rhs) < 1e-12 ? abs_err : abs_err / std::abs(rhs); }

double quad_tol(double tol) { return std::max(tol * 1e-2, 1e-13); }

}  // namespace

std::optional<Constraint> first_violation(const std::string& id, const IdentityParams& p) {
    const IdentityDescriptor& d = find_identity(id);
    require_arity(d, p);
    for (const Constraint& c : d.domain(p))
        if (!c.ok()) return c;
    return std::nullopt;
}

void check_domain(const std::string& id, const IdentityParams& p) {
    if (auto c = first_violation(id, p)) throw DomainViolation(c->name, c->value, c->bound);
}

IdentityReport evaluate_identity(const std::string& id, const IdentityParams& p, double tol) {
    const IdentityDescriptor& d = find_identity(id);
    check_domain(id, p);
    if (d.pole_check) d.pole_check(p);
    if (tol <= 0.0) tol = d.default_tol;

    const auto t0 = std::chrono::steady_clock::now();
    IdentityReport r;
    r.id = id;
    r.params = p;
    r.tol = tol;
    const SideValue lhs = d.lhs(p, quad_tol(tol));
    r.lhs = lhs.value;
    r.rhs = d.rhs(p, quad_tol(tol));
    r.evals = lhs.evals;
    r.lhs_err_est = lhs.err_est;
    r.truncation_radius = lhs.radius;
    if (!is_finite(r.lhs) || !is_finite(r.rhs)) raise(ErrorKind::NonFiniteSample, id + ": non-finite value");
    r.abs_err = std::abs(r.lhs - r.rhs);
    r.rel_err = rel_or_abs(r.abs_err, r.rhs);
    r.pass = r.rel_err <= tol;
    r.diagnostics["lhs_err_est"] = lhs.err_est;
    r.diagnostics["truncation_radius"] = lhs.radius;
    if (id == "nr_to_aw_limit") {
        const TauParameter tp(p.tau);
        const cplx aw = hyper_aw_rhs({p.values.begin() + 1, p.values.end()}, tp);
        r.diagnostics["aw_limit_deviation"] = std::abs(r.rhs - aw) / std::abs(aw);
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

IdentityReport residue_ramanujan(cplx c, cplx d, const TauParameter& tp, double tol) {
    if (tp.tau().imag() <= 0.0) throw DomainViolation("Im(τ)>0", tp.tau().imag(), 0.0);
    const double hq = std::exp(pi * tp.tau().imag());  // |q^{-1/2}|
    if (!(std::abs(c) > 1.0)) throw DomainViolation("|c|>1", std::abs(c), 1.0);
    if (!(std::abs(c) < hq)) throw DomainViolation("|c|<|q^−1/2|", std::abs(c), hq);
    if (!(std::abs(d) > 0.0)) throw DomainViolation("|d|>0", std::abs(d), 0.0);
    if (!(std::abs(d) < hq)) throw DomainViolation("|d|<|q^−1/2|", std::abs(d), hq);

    const auto t0 = std::chrono::steady_clock::now();
    const cplx q = tp.q(), h = tp.q_pow(0.5);
    auto P = [&](cplx x) { return log_qpoch(x, q, 1e-17); };

    // residues at z = -c q^{1/2+m}, m >= 0
    const SeriesValue s = phi_series({q * c * d}, {}, q, 1.0 / c, 1e-17);
    const cplx residues = (P(q * c) * P(1.0 / c) / P(q * c * d)).value() * s.value;

    const QuadratureValue circ = integrate_circle(
        [&](cplx z) {
            LogValue v = P(q) * P(-h / z) * P(-h * z);
            v /= P(-h * c / z) * P(-h * d * z);
            return v.value();
        },
        quad_tol(tol));
    const cplx closed = (P(q * c) * P(q * d) / P(q * c * d)).value();

    IdentityReport r;
    r.id = "residue_ramanujan";
    r.params = {tp.tau(), {c, d}};
    r.tol = tol;
    r.lhs = residues;
    r.rhs = closed;
    r.evals = circ.evals;
    r.lhs_err_est = s.trunc_err;
    r.abs_err = std::max(std::abs(residues - closed), std::abs(circ.value - closed));
    r.rel_err = rel_or_abs(r.abs_err, closed);
    r.pass = r.rel_err <= tol && rel_or_abs(std::abs(residues - circ.value), closed) <= tol;
    r.diagnostics["quadrature_re"] = circ.value.real();
    r.diagnostics["quadrature_im"] = circ.value.imag();
    r.diagnostics["quadrature_err_est"] = circ.err_est;
    r.diagnostics["series_terms"] = double(s.terms_used);
    r.diagnostics["series_vs_quadrature"] = rel_or_abs(std::abs(residues - circ.value), closed);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace {

// Limit target of the scale-r elliptic integral as r -> 0: alpha times the real-line
// hyperbolic integral, which is -i times the imaginary-axis closed form.
cplx degeneration_target(const IdentityParams& p) {
    const TauParameter tp(p.tau);
    std::vector<cplx> tj(p.values.begin(), p.values.begin() + 5);
    cplx a = 0.0;
    for (cplx t : tj) a += t;
    const cplx h = 0.5 / p.tau;
    cplx e = (h - 0.5) * (h - 0.5) + (h + 4.5 - a) * (h + 4.5 - a);
    for (cplx t : tj) e -= (h + 0.5 - t) * (h + 0.5 - t);
    const cplx log_alpha = tp.log_q_pow(-0.125) + tp.log_qt_pow(0.125) + tp.log_q_pow(-0.5 * e);
    return std::exp(log_alpha) * (-I) * hyper_nr_rhs(tj, tp);
}

double c_r(double tau, double r) {
    const double p2 = std::exp(-2.0 * pi * r), p1 = std::exp(2.0 * pi * r / tau);
    const cplx den = (log_qpoch(p2, p2) * log_qpoch(p1, p1)).value();
    return (2.0 * std::exp(pi / (12.0 * r) * (tau - 1.0)) / (r * den)).real();
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (size_t j = 1; j < v.size(); ++j)
        if (!(v[j] < v[j - 1])) return false;
    return true;
}

}  // namespace

LimitStudy limit_study(const std::string& id, const IdentityParams& p, const std::vector<double>& schedule,
                       double tol) {
    const IdentityDescriptor& d = find_identity(id);
    LimitStudy out;
    out.id = id;
    std::vector<double> dev, aux;
    for (double s : schedule) {
        IdentityParams q = p;
        LimitPoint pt;
        pt.parameter = s;
        if (id == "degeneration_ell_to_hyp") {
            q.values[5] = s;
            check_domain(id, q);
            const cplx target = degeneration_target(q);
            const cplx lhs = d.lhs(q, tol).value;
            pt.deviation = std::abs(lhs - target);
            pt.aux_deviation = std::abs(c_r(q.tau.real(), s) - 2.0 / std::sqrt(-q.tau.real()));
            aux.push_back(pt.aux_deviation);
        } else if (id == "nr_to_aw_limit") {
            q.values[0] = cplx(p.values[0].real(), s);
            check_domain(id, q);
            const TauParameter tp(q.tau);
            const cplx aw = hyper_aw_rhs({q.values.begin() + 1, q.values.end()}, tp);
            pt.deviation = std::abs(hyper_nr_rhs(q.values, tp) - aw);
        } else if (id == "etingof_type_limit") {
            q.values[4] = s;
            check_domain(id, q);
            if (d.pole_check) d.pole_check(q);
            const cplx rhs = d.rhs(q, tol);
            pt.deviation = std::abs(d.lhs(q, tol).value - rhs);
        } else {
            raise(ErrorKind::UnknownIdentity, id + " has no limit study");
        }
        dev.push_back(pt.deviation);
        out.points.push_back(pt);
    }
    out.monotone = strictly_decreasing(dev);
    out.aux_monotone = strictly_decreasing(aux);
    if (!out.monotone) out.diagnostics.push_back("NonMonotoneTrend: deviations not strictly decreasing");
    if (!out.aux_monotone) out.diagnostics.push_back("NonMonotoneTrend: c_r deviations not strictly decreasing");
    return out;
}

std::vector<IdentityParams> draw_params(const IdentityDescriptor& d, long count, std::uint64_t seed,
                                        std::optional<cplx> tau_override, long* rejected) {
    std::mt19937_64 rng(seed);
    auto u = [&](double lo, double hi) {
        if (lo == hi) return lo;
        return lo + (hi - lo) * double(rng() >> 11) * 0x1.0p-53;
    };
    std::vector<IdentityParams> out;
    long rej = 0;
    const long max_attempts = 1000 * std::max(count, 1L);
    for (long att = 0; long(out.size()) < count && att < max_attempts; ++att) {
        IdentityParams p;
        const auto& tr = d.box.tau_range;
        const double tre = u(tr[0], tr[1]), tim = u(tr[2], tr[3]);
        p.tau = tau_override ? *tau_override : cplx(tre, tim);
        for (const auto& r : d.box.ranges) {
            const double re = u(r[0], r[1]);
            const double im = u(r[2], r[3]);
            p.values.emplace_back(re, im);
        }
        bool ok = true;
        try {
            for (const Constraint& c : d.domain(p)) ok = ok && c.ok();
            if (ok && d.pole_check) d.pole_check(p);
        } catch (const Error& e) {
            if (!is_domain_error(e.kind())) throw;
            ok = false;
        }
        if (ok)
            out.push_back(p);
        else
            ++rej;
    }
    if (long(out.size()) < count)
        raise(ErrorKind::DomainViolation, "could not draw " + std::to_string(count) + " in-domain points for " + d.id);
    if (rejected) *rejected = rej;
    return out;
}

cplx log_gamma(cplx z) {
    if (z.real() < 0.5) {
        // reflection; log(pi / sin(pi z)) with a consistent branch is not needed since only exp() is used
        return std::log(pi / std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    cplx shift = 0.0;
    while (std::abs(z) < 15.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    static const double B[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188, -691.0 / 360360,
                               1.0 / 156,  -3617.0 / 122400};
    const cplx iz = 1.0 / z, iz2 = iz * iz;
    cplx s = 0.0, w = iz;
    for (double b : B) {
        s += b * w;
        w *= iz2;
    }
    return shift + (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + s;
}

}  // namespace hypbeta
