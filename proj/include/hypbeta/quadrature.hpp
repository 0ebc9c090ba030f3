#pragma once

#include <functional>
#include <string>

#include "hypbeta/complex.hpp"

namespace hypbeta {

enum class ContourKind { segment, real_line, imaginary_line, shifted_line, unit_circle };

const char* to_string(ContourKind k);

struct Contour {
    ContourKind kind = ContourKind::segment;
    cplx a{0.0, 0.0};  // segment start
    cplx b{1.0, 0.0};  // segment end
    double shift = 0.0;  // imaginary offset for shifted_line
    double truncation_radius = 0.0;

    static Contour segment(cplx a, cplx b) { return {ContourKind::segment, a, b, 0.0, 0.0}; }
    static Contour real_line() { return {ContourKind::real_line, 0.0, 0.0, 0.0, 0.0}; }
    static Contour imaginary_line() { return {ContourKind::imaginary_line, 0.0, 0.0, 0.0, 0.0}; }
    static Contour shifted_line(double eps) { return {ContourKind::shifted_line, 0.0, 0.0, eps, 0.0}; }
    static Contour unit_circle() { return {ContourKind::unit_circle, 0.0, 0.0, 0.0, 0.0}; }
};

struct QuadratureValue {
    cplx value{0.0, 0.0};
    double err_est = 0.0;  // includes tail_bound
    long evals = 0;
    Contour contour;
    double tail_bound = 0.0;
};

struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_subdivisions = 20000;
    int initial_panels = 1;
};

using RealFun = std::function<cplx(double)>;
using CplxFun = std::function<cplx(cplx)>;

// Adaptive Gauss-Kronrod 7/15 on [a, b] of a complex-valued function of a real variable.
QuadratureValue integrate_real(const RealFun& f, double a, double b, const QuadOptions& opt);

// Integral of f(z) dz along the straight segment from a to b.
QuadratureValue integrate_segment(const CplxFun& f, cplx a, cplx b, double tol);
QuadratureValue integrate_segment(const CplxFun& f, cplx a, cplx b, const QuadOptions& opt);

// Integral of f(z) dz along an infinite line contour, truncated with a tail bound.
// decay > 0: |f| ~ exp(-decay |s|) along the line; decay <= 0 probes the decay.
// abs_floor bounds the absolute accuracy asked for when the result may vanish.
QuadratureValue integrate_line(const CplxFun& f, const Contour& c, double decay, double tol, double abs_floor = 0.0);

// (1/2 pi i) of the closed integral of g(z) dz/z over |z| = 1.
QuadratureValue integrate_circle(const CplxFun& g, double tol);

}  // namespace hypbeta
