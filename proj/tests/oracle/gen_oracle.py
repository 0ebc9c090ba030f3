# Regenerates the frozen reference values pasted into the unit tests.
# Needs mpmath; run with python3 tests/oracle/gen_oracle.py
import mpmath as mp

mp.mp.dps = 40


def qp(a, q):
    return mp.qp(a, q)


def theta(z, tau):
    q = mp.exp(2j * mp.pi * tau)
    return mp.nsum(lambda m: q ** (m * m / 2) * mp.exp(2j * mp.pi * m * z), [-mp.inf, mp.inf])


def eta(s):
    q = mp.exp(2j * mp.pi * s)
    return mp.exp(1j * mp.pi * s / 12) * qp(q, q)


def gamma_h(ap, am, z):
    ap, am, z = mp.mpmathify(ap), mp.mpmathify(am), mp.mpmathify(z)
    def f(y):
        # the two terms cancel as y -> 0; add digits to compensate
        extra = int(3 * max(0, -mp.log10(y))) if y > 0 else 0
        with mp.workdps(40 + extra):
            return (mp.sin(2 * y * z) / (2 * mp.sinh(ap * y) * mp.sinh(am * y)) - z / (ap * am * y)) / y
    # beyond Y only the -z/(a+ a- y^2) part survives
    Y = 120
    g = mp.quad(f, [0, 0.5, 2, 8, 30, Y]) - z / (ap * am * Y)
    return mp.exp(1j * g)


def tau_factorial(z, tau):
    q = mp.exp(2j * mp.pi * tau)
    qt = mp.exp(-2j * mp.pi / tau)
    return qp(mp.exp(-2j * mp.pi * z), qt) / qp(mp.exp(2j * mp.pi * tau * z), q)


def tau_factorial_unimodular(z, tau):
    # real tau < 0: Gaussian times Gamma_h(i u; -1/tau, 1), u measured from 1/2 + 1/(2 tau)
    tau, z = mp.mpmathify(tau), mp.mpmathify(z)
    u = z - (mp.mpf(1) / 2 + 1 / (2 * tau))
    logk = -2j * mp.pi * tau / 24 - 2j * mp.pi / (24 * tau)
    return mp.exp(2j * mp.pi * tau * u * u / 4 + logk / 2) * gamma_h(-1 / tau, 1, 1j * u)


def elliptic_gamma(z, p, q):
    return mp.nprod(lambda j: mp.nprod(lambda k: (1 - p ** (j + 1) * q ** (k + 1) / z) / (1 - z * p ** j * q ** k),
                                       [0, mp.inf]), [0, mp.inf])


def bilateral_1psi1(a, b, q, z):
    def term(m):
        m = int(m)
        if m >= 0:
            return mp.qp(a, q, m) / mp.qp(b, q, m) * z ** m
        # (x;q)_{-n} = 1/(x q^{-n};q)_n
        n = -m
        return mp.qp(b * q ** (-n), q, n) / mp.qp(a * q ** (-n), q, n) * z ** m
    return mp.nsum(term, [-mp.inf, mp.inf])


def aw_integral(t, q):
    def w(th):
        e = mp.exp(1j * th)
        num = qp(e * e, q) * qp(1 / (e * e), q)
        den = 1
        for a in t:
            den *= qp(a * e, q) * qp(a / e, q)
        return num / den
    return mp.quad(w, [-mp.pi, 0, mp.pi]) / (2 * mp.pi)


def show(name, v):
    v = mp.mpc(v)
    print(f"{name}: cplx({mp.nstr(v.real, 17)}, {mp.nstr(v.imag, 17)})")


show("qpoch(0.5, 0.3)", qp(0.5, 0.3))
show("qpoch(0.3+0.4i, -0.2+0.6i)", qp(mp.mpc(0.3, 0.4), mp.mpc(-0.2, 0.6)))
show("qpoch(2-1i, 0.1+0.2i)", qp(mp.mpc(2, -1), mp.mpc(0.1, 0.2)))
show("theta(0, i)", theta(0, 1j))
show("theta(0.2+0.1i, 0.3+0.8i)", theta(mp.mpc(0.2, 0.1), mp.mpc(0.3, 0.8)))
show("eta(i)", eta(1j))
show("eta(0.25+0.6i)", eta(mp.mpc(0.25, 0.6)))
show("2phi1(0.3,0.5;0.7;0.4,0.6)", mp.qhyper([0.3, 0.5], [0.7], 0.4, 0.6))
show("1psi1(0.5,0.3i;q=0.3,z=0.7)", bilateral_1psi1(mp.mpf(0.5), mp.mpc(0, 0.3), mp.mpf(0.3), mp.mpf(0.7)))
show("gamma_h(1,2;0.5i)", gamma_h(1, 2, 0.5j))
show("gamma_h(1,1.3;0.4+0.2i)", gamma_h(1, 1.3, mp.mpc(0.4, 0.2)))
show("gamma_h(0.7,1.6;-1.5+0.3i)", gamma_h(0.7, 1.6, mp.mpc(-1.5, 0.3)))
show("gamma_h(1+0.2i,0.9-0.1i;0.3-0.2i)", gamma_h(mp.mpc(1, 0.2), mp.mpc(0.9, -0.1), mp.mpc(0.3, -0.2)))
show("tau_factorial(0.2+0.1i; 0.3+1.1i)", tau_factorial(mp.mpc(0.2, 0.1), mp.mpc(0.3, 1.1)))
show("tau_factorial(-0.7+0.3i; -0.2+0.9i)", tau_factorial(mp.mpc(-0.7, 0.3), mp.mpc(-0.2, 0.9)))
show("tau_factorial(0.3+0.2i; -sqrt2)", tau_factorial_unimodular(mp.mpc(0.3, 0.2), -mp.sqrt(2)))
show("elliptic_gamma(0.5+0.3i;0.2,0.3i)", elliptic_gamma(mp.mpc(0.5, 0.3), mp.mpf(0.2), mp.mpc(0, 0.3)))
show("aw_integral(0.3,0.2,-0.25,0.4i; q=e^{2pi i 0.3i})",
     aw_integral([0.3, 0.2, -0.25, 0.4j], mp.exp(-2 * mp.pi * 0.3)))
show("loggamma(3.3-2.1i)", mp.loggamma(mp.mpc(3.3, -2.1)))
show("loggamma(-2.6+0.4i)", mp.loggamma(mp.mpc(-2.6, 0.4)))
show("beta(2.5,1.5)", mp.beta(2.5, 1.5))
