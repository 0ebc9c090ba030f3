"""Python access to the hypbeta core: special functions, identity checks and the CLI."""

import json

from ._core import (
    DomainViolation,
    HypbetaError,
    elliptic_gamma,
    eta,
    format_complex,
    gamma_h,
    gamma_h_product,
    identity_ids,
    param_names,
    parse_complex,
    qpoch,
    run_cli,
    tau_factorial,
    theta,
)
from . import _core

__all__ = [
    "DomainViolation",
    "HypbetaError",
    "elliptic_gamma",
    "eta",
    "format_complex",
    "gamma_h",
    "gamma_h_product",
    "identity_ids",
    "param_names",
    "parse_complex",
    "qpoch",
    "run_cli",
    "sweep",
    "tau_factorial",
    "theta",
    "verify",
]


def verify(identity, tau=None, params=None, tol=0.0):
    """Report row (dict) for one identity; defaults fill in tau and params."""
    if params is not None:
        params = [complex(p) for p in params]
    if tau is not None:
        tau = complex(tau)
    return json.loads(_core._verify_json(identity, tau, params, tol))


def sweep(identity, count, seed=20240611, tau=None, jobs=1, tol=0.0):
    """Seeded random sweep; returns the parsed JSON report."""
    args = ["--seed", str(seed), "--jobs", str(jobs)]
    if tol:
        args += ["--tol", repr(float(tol))]
    args += ["sweep", "--identity", identity, "--count", str(count)]
    if tau is not None:
        args.append("--tau=" + format_complex(complex(tau)))
    status, out, err = run_cli(args)
    if status == 64:
        raise ValueError(err.strip())
    report = json.loads(out)
    report["status"] = status
    return report
