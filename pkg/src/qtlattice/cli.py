"""Command-line front end.

Subcommands expose every computation with machine-readable output: JSON for
single objects, CSV for grids.  Data goes to stdout (or --out); diagnostics
go to stderr.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import evolution, exact, horizons, lattice, metrics, observables

USAGE_ERROR = 2
DOMAIN_ERROR = 1


class DomainError(Exception):
    pass


def _float_repr(x) -> float:
    return float(x)


def _dump_json(obj, stream) -> None:
    json.dump(obj, stream, indent=2, default=_float_repr)
    stream.write("\n")


def _parse_tolerances(argv: list[str]) -> tuple[list[str], dict[str, float]]:
    """Strip --tol-NAME VALUE pairs before argparse sees them."""
    remaining: list[str] = []
    tolerances: dict[str, float] = {}
    i = 0
    while i < len(argv):
        token = argv[i]
        if token.startswith("--tol-"):
            name = token[len("--tol-") :]
            if i + 1 >= len(argv):
                raise SystemExit(USAGE_ERROR)
            value = float(argv[i + 1])
            if value <= 0:
                print(f"tolerance {name} must be positive", file=sys.stderr)
                raise SystemExit(USAGE_ERROR)
            tolerances[name] = value
            i += 2
        else:
            remaining.append(token)
            i += 1
    return remaining, tolerances


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtlattice", description="Legendre-lattice quasi-Hermitian toolkit"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, needs_n=True):
        if needs_n:
            p.add_argument("--n", type=int, required=True, help="lattice size N")
        p.add_argument("--format", choices=("json", "csv"), default=None)
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("spectrum", help="eigenvalues of the lattice Hamiltonian")
    common(p)

    p = sub.add_parser("metric", help="a metric operator (diagonal, kappa or tridiagonal)")
    common(p)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--kappa", default=None, help='comma list or "exceptional"')
    p.add_argument("--require-positive", action="store_true")

    p = sub.add_parser("charge", help="charge operator C = Q^{-1} Theta")
    common(p)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--kappa", default=None)

    p = sub.add_parser("horizon", help="positivity boundary gamma of the tridiagonal family")
    common(p)

    p = sub.add_parser("scan", help="reality scan of Theta(alpha)^{-1} K over an alpha grid")
    common(p)
    p.add_argument("--alpha-min", type=float, required=True)
    p.add_argument("--alpha-max", type=float, required=True)
    p.add_argument("--alpha-steps", type=int, required=True)
    p.add_argument("--k-matrix", default=None, help="JSON matrix file (default identity)")

    p = sub.add_parser("check-observability", help="Dieudonne + overlap-product tests")
    common(p)
    p.add_argument("--k-matrix", required=True, help="JSON file with the candidate matrix")
    p.add_argument("--kappa", default="exceptional")

    p = sub.add_parser("evolve", help="Theta-norm and Dirac-norm along the evolution")
    common(p)
    p.add_argument("--t-max", type=float, default=10.0)
    p.add_argument("--t-steps", type=int, default=101)
    p.add_argument("--kappa", default=None)

    p = sub.add_parser("verify", help="run the exact-arithmetic oracle checks")
    common(p, needs_n=False)
    p.add_argument("--n-max", type=int, default=8)
    return parser


def _load_matrix(path: str, N: int) -> np.ndarray:
    with open(path) as fh:
        payload = json.load(fh)
    matrix = np.asarray(payload["matrix"], dtype=float)
    if payload.get("dimension") != N or matrix.shape != (N, N):
        raise DomainError(f"matrix in {path} does not have dimension {N}")
    return matrix


def _parse_kappa(text: str | None, system) -> metrics.KappaVector:
    if text is None or text == "exceptional":
        return metrics.exceptional_kappa(system)
    values = np.array([float(tok) for tok in text.split(",")])
    return metrics.KappaVector(system.dimension, values)


def _resolve_metric(args, N: int) -> metrics.MetricOperator:
    if args.alpha is not None and args.kappa is not None:
        raise DomainError("--alpha and --kappa are mutually exclusive")
    if args.alpha is not None:
        return metrics.tridiagonal_metric(N, args.alpha)
    if args.kappa is not None:
        system = lattice.biorthogonal_system(N)
        return metrics.metric_from_kappa(system, _parse_kappa(args.kappa, system))
    Q = lattice.build_metric_Q(N)
    return metrics.MetricOperator(N, Q.to_dense(), "positive-definite", "diagonal-Q")


def _cmd_spectrum(args, out):
    result = lattice.spectrum(lattice.build_hamiltonian(args.n))
    if args.format == "csv":
        out.write("eigenvalue\n")
        for value in result.roots:
            out.write(f"{value!r}\n")
    else:
        _dump_json(result.to_json(), out)


def _cmd_metric(args, out):
    theta = _resolve_metric(args, args.n)
    if args.require_positive and theta.definiteness != "positive-definite":
        raise DomainError(f"metric is {theta.definiteness}, not positive-definite")
    _dump_json(theta.to_json(), out)


def _cmd_charge(args, out):
    theta = _resolve_metric(args, args.n)
    C = metrics.charge_operator(lattice.build_metric_Q(args.n), theta)
    _dump_json(C.to_json(), out)


def _cmd_horizon(args, out):
    _dump_json(horizons.horizon_gamma(args.n).to_json(), out)


def _cmd_scan(args, out):
    if args.alpha_steps < 2:
        raise DomainError("--alpha-steps must be at least 2")
    grid = np.linspace(args.alpha_min, args.alpha_max, args.alpha_steps)
    K = (
        _load_matrix(args.k_matrix, args.n)
        if args.k_matrix
        else np.eye(args.n)
    )
    scan = horizons.hidden_horizon_scan(args.n, K, grid)
    out.write("alpha,max_imag,definiteness\n")
    for alpha, imag, label in zip(scan.alpha_grid, scan.max_imag, scan.definiteness):
        imag_text = "" if np.isnan(imag) else repr(float(imag))
        out.write(f"{alpha!r},{imag_text},{label}\n")


def _cmd_check_observability(args, out):
    Lambda = _load_matrix(args.k_matrix, args.n)
    system = lattice.biorthogonal_system(args.n)
    kappa = _parse_kappa(args.kappa, system)
    theta = metrics.metric_from_kappa(system, kappa)
    residual = observables.dieudonne_residual(Lambda, theta)
    tol = args.tolerances.get("criterion", observables.DEFAULT_CRITERION_TOL)
    report = {
        "dimension": args.n,
        "dieudonne_residual": residual,
        "tolerance": tol,
    }
    try:
        data = observables.spectral_data(Lambda)
        pair = observables.overlap_matrices(system, kappa, data)
        report["hermiticity_residual"] = pair.hermiticity_residual
        report["product_hermitian"] = observables.criterion_product_hermitian(pair, tol)
    except ValueError as exc:
        report["overlap_test"] = f"unavailable: {exc}"
    report["observable"] = residual <= tol
    _dump_json(report, out)


def _cmd_evolve(args, out):
    system = lattice.biorthogonal_system(args.n)
    if args.kappa:
        theta = metrics.metric_from_kappa(system, _parse_kappa(args.kappa, system))
    else:
        Q = lattice.build_metric_Q(args.n)
        theta = metrics.MetricOperator(args.n, Q.to_dense(), "positive-definite", "diagonal-Q")
    if theta.definiteness != "positive-definite":
        raise DomainError("evolution norms need a positive-definite metric")
    psi0 = np.ones(args.n) / np.sqrt(args.n)
    coefficients = (system.ketkets.T @ psi0.astype(complex)) / system.q_norms
    out.write("t,theta_norm,dirac_norm\n")
    for t in np.linspace(0.0, args.t_max, args.t_steps):
        phases = np.exp(-1j * system.eigenvalues.roots * t)
        v = system.kets @ (phases * coefficients)
        theta_norm = float(np.real(v.conj() @ theta.matrix @ v))
        dirac_norm = float(np.real(v.conj() @ v))
        out.write(f"{t!r},{theta_norm!r},{dirac_norm!r}\n")


def _cmd_verify(args, out):
    certificates = []
    for N in range(1, min(args.n_max, exact.INTERTWINING_N_MAX) + 1):
        ok, witness = exact.exact_intertwining_check(N)
        certificates.append(
            {"check": "intertwining", "N": N, "pass": ok, "witness": str(witness)}
        )
    for N in range(2, min(args.n_max, exact.INTERTWINING_N_MAX) + 1):
        couplings = exact.exact_tridiagonal_solve(N)
        ok = couplings == [exact.Fraction(k) for k in range(1, N)]
        certificates.append(
            {
                "check": "tridiagonal-couplings",
                "N": N,
                "pass": ok,
                "witness": ",".join(str(c) for c in couplings),
            }
        )
    for N in range(1, min(args.n_max, 6) + 1):
        ok = exact.exact_exceptional_identity(N)
        certificates.append(
            {"check": "exceptional-identity", "N": N, "pass": ok, "witness": ""}
        )
    ok, witness = exact.exact_intertwining_check_factorial(3)
    certificates.append(
        {
            "check": "factorial-diagonal-intertwining",
            "N": 3,
            "pass": not ok,  # the published closed form must fail
            "witness": str(witness),
        }
    )
    _dump_json(certificates, out)


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "metric": _cmd_metric,
    "charge": _cmd_charge,
    "horizon": _cmd_horizon,
    "scan": _cmd_scan,
    "check-observability": _cmd_check_observability,
    "evolve": _cmd_evolve,
    "verify": _cmd_verify,
}


def run(argv: list[str]) -> int:
    """Dispatch a CLI invocation; returns the process exit status."""
    try:
        argv, tolerances = _parse_tolerances(argv)
    except SystemExit as exc:
        return exc.code
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    args.tolerances = tolerances
    if getattr(args, "n", 1) < 1:
        print("dimension must be at least 1", file=sys.stderr)
        return USAGE_ERROR
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        _COMMANDS[args.subcommand](args, out)
    except (DomainError, ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    finally:
        if args.out:
            out.close()
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
