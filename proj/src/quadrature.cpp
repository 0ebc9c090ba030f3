#include "hypbeta/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "hypbeta/errors.hpp"

namespace hypbeta {

const char* to_string(ContourKind k) {
    switch (k) {
        case ContourKind::segment: return "segment";
        case ContourKind::real_line: return "real_line";
        case ContourKind::imaginary_line: return "imaginary_line";
        case ContourKind::shifted_line: return "shifted_line";
        case ContourKind::unit_circle: return "unit_circle";
    }
    return "segment";
}

namespace {

constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    cplx val;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const RealFun& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const cplx fc = f(c);
    if (!is_finite(fc)) raise(ErrorKind::NonFiniteSample, "at t = " + std::to_string(c));
    cplx rk = fc * wgk[7];
    cplx rg = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const cplx f1 = f(c - dx), f2 = f(c + dx);
        if (!is_finite(f1) || !is_finite(f2))
            raise(ErrorKind::NonFiniteSample, "at t = " + std::to_string(c - dx) + " or " + std::to_string(c + dx));
        rk += wgk[j] * (f1 + f2);
        if (j % 2 == 1) rg += wg[j / 2] * (f1 + f2);
    }
    return {a, b, rk * h, std::abs((rk - rg) * h)};
}

}  // namespace

QuadratureValue integrate_real(const RealFun& f, double a, double b, const QuadOptions& opt) {
    QuadratureValue out;
    out.contour = Contour::segment(a, b);
    if (a == b) return out;
    std::priority_queue<Panel> heap;
    const int n0 = std::max(1, opt.initial_panels);
    cplx total = 0.0;
    double err = 0.0;
    for (int k = 0; k < n0; ++k) {
        const double x0 = a + (b - a) * k / n0;
        const double x1 = k + 1 == n0 ? b : a + (b - a) * (k + 1) / n0;
        Panel p = gk15(f, x0, x1);
        total += p.val;
        err += p.err;
        heap.push(p);
    }
    out.evals = 15L * n0;
    int splits = 0;
    while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (splits >= opt.max_subdivisions) {
            const Panel& w = heap.top();
            raise(ErrorKind::MaxSubdivisions, "worst panel [" + std::to_string(w.a) + ", " + std::to_string(w.b) +
                                                  "] err " + std::to_string(w.err));
        }
        Panel p = heap.top();
        heap.pop();
        const double m = 0.5 * (p.a + p.b);
        if (!(m > p.a && m < p.b)) {
            // panel cannot be split further in double precision
            heap.push({p.a, p.b, p.val, 0.0});
            err -= p.err;
            continue;
        }
        Panel l = gk15(f, p.a, m), r = gk15(f, m, p.b);
        out.evals += 30;
        total += l.val + r.val - p.val;
        err += l.err + r.err - p.err;
        heap.push(l);
        heap.push(r);
        ++splits;
    }
    // fixed summation order independent of refinement history
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    cplx sum = 0.0;
    double esum = 0.0;
    for (const Panel& p : panels) {
        sum += p.val;
        esum += p.err;
    }
    out.value = sum;
    out.err_est = esum;
    return out;
}

QuadratureValue integrate_segment(const CplxFun& f, cplx a, cplx b, const QuadOptions& opt) {
    const cplx d = b - a;
    if (d == 0.0) raise(ErrorKind::ParameterOutOfRange, "segment endpoints coincide");
    QuadratureValue r = integrate_real([&](double t) { return f(a + d * t); }, 0.0, 1.0, opt);
    r.value *= d;
    r.err_est *= std::abs(d);
    r.contour = Contour::segment(a, b);
    return r;
}

QuadratureValue integrate_segment(const CplxFun& f, cplx a, cplx b, double tol) {
    QuadOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol * 1e-3;
    return integrate_segment(f, a, b, opt);
}

namespace {

struct LineMap {
    cplx origin, dir;
};

LineMap line_map(const Contour& c) {
    switch (c.kind) {
        case ContourKind::real_line: return {0.0, 1.0};
        case ContourKind::imaginary_line: return {0.0, I};
        case ContourKind::shifted_line: return {cplx(0.0, c.shift), 1.0};
        default: raise(ErrorKind::ParameterOutOfRange, "integrate_line needs an infinite contour");
    }
}

}  // namespace

QuadratureValue integrate_line(const CplxFun& f, const Contour& c, double decay, double tol, double abs_floor) {
    const LineMap lm = line_map(c);
    long evals = 0;
    auto g = [&](double s) {
        ++evals;
        return f(lm.origin + lm.dir * s) * lm.dir;
    };
    auto edge = [&](double r) {
        // sample a few points near +-r so an oscillation node cannot hide the envelope
        double m = 0.0;
        for (double d : {0.0, 0.173, 0.391}) {
            m = std::max(m, std::abs(g(r + d)));
            m = std::max(m, std::abs(g(-r - d)));
        }
        return m;
    };
    double rate = decay;
    if (!(rate > 0.0)) {
        // probe 2, 4, ..., 64
        double prev = edge(2.0);
        int flat = 0;
        rate = 0.0;
        double r = 2.0;
        for (int k = 0; k < 5; ++k) {
            const double rn = 2.0 * r;
            const double cur = edge(rn);
            if (!(cur < prev)) {
                if (++flat >= 3) raise(ErrorKind::NoDecayDetected, "|f| does not decrease at probe radii up to 64");
            } else if (cur == 0.0) {
                rate = std::max(rate, 50.0 / rn);
                break;
            } else {
                rate = std::max(rate, std::log(prev / cur) / (rn - r));
            }
            prev = cur;
            r = rn;
            if (cur < 1e-300) break;
        }
        if (!(rate > 0.0)) raise(ErrorKind::NoDecayDetected, "could not estimate a decay rate");
    }
    QuadOptions opt;
    opt.rel_tol = tol / 4.0;
    opt.abs_tol = abs_floor / 4.0;
    // asymmetric non-dyadic cut points keep the nodes off integers and half-integers
    double lo = -8.0 * 1.0137, hi = 8.0 * 1.0071;
    QuadratureValue core = integrate_real(g, lo, hi, [&] {
        QuadOptions o = opt;
        o.initial_panels = 16;
        return o;
    }());
    cplx value = core.value;
    double err = core.err_est;
    double tail = 0.0;
    for (int it = 0; it < 60; ++it) {
        const double mr = std::max(edge(hi), edge(-lo));
        tail = 2.0 * 2.0 * mr / rate;
        const double target = std::max({tol * std::abs(value), abs_floor, 1e-300});
        if (tail < target / 2.0) break;
        const double nlo = lo * 1.5, nhi = hi * 1.5;
        QuadOptions o = opt;
        o.abs_tol = std::max(tol * std::abs(value), abs_floor) / 8.0;
        o.initial_panels = 8;
        QuadratureValue left = integrate_real(g, nlo, lo, o);
        QuadratureValue right = integrate_real(g, hi, nhi, o);
        value = left.value + value + right.value;
        err += left.err_est + right.err_est;
        lo = nlo;
        hi = nhi;
        if (hi > 1e4) raise(ErrorKind::NoDecayDetected, "tail bound not reached within radius 1e4");
    }
    QuadratureValue out;
    out.value = value;
    out.tail_bound = tail;
    out.err_est = err + tail;
    out.evals = evals;
    out.contour = c;
    out.contour.truncation_radius = std::max(hi, -lo);
    return out;
}

QuadratureValue integrate_circle(const CplxFun& g, double tol) {
    const double theta0 = 0.0613;
    long n = 16;
    auto node = [&](long k, long nn) { return std::polar(1.0, theta0 + 2.0 * pi * static_cast<double>(k) / nn); };
    cplx sum = 0.0;
    for (long k = 0; k < n; ++k) {
        const cplx v = g(node(k, n));
        if (!is_finite(v)) raise(ErrorKind::NonFiniteSample, "circle node");
        sum += v;
    }
    long evals = n;
    cplx prev = sum / static_cast<double>(n);
    for (; n < (1L << 17);) {
        cplx add = 0.0;
        for (long k = 1; k < 2 * n; k += 2) {
            const cplx v = g(node(k, 2 * n));
            if (!is_finite(v)) raise(ErrorKind::NonFiniteSample, "circle node");
            add += v;
        }
        evals += n;
        sum += add;
        n *= 2;
        const cplx cur = sum / static_cast<double>(n);
        const double diff = std::abs(cur - prev);
        prev = cur;
        if (n >= 64 && diff <= tol * std::max(std::abs(cur), 1e-3)) {
            QuadratureValue out;
            out.value = cur;
            out.err_est = diff;
            out.evals = evals;
            out.contour = Contour::unit_circle();
            return out;
        }
    }
    raise(ErrorKind::MaxSubdivisions, "circle rule did not converge with 2^17 nodes");
}

}  // namespace hypbeta
