"""Command-line interface: ``wielandt analyze | bounds | extremal | verify``.

Every command reads one matrix file and writes a JSON report to stdout.
The report always has the same top-level keys (``tool``, ``version``,
``command``, ``input``, ``spectral``, ``payload``, ``suite``, ``seed``).

Exit codes: 0 success, 1 violations found, 2 parse or I/O error,
3 numeric failure, 4 zero or dependent vectors, 5 degenerate pencil.
"""

import argparse
import dataclasses
import sys

import numpy as np

from . import __version__, bounds, extremal, io, linalg, oracle
from .angles import full_report
from .errors import (
    DegeneratePencil,
    DependentVectors,
    DimensionError,
    ParseError,
    WielandtError,
    ZeroVector,
)
from .spectrum import analyze

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_NUMERIC, EXIT_VECTORS, EXIT_DEGENERATE = range(6)


class _Violation(Exception):
    """Carries a finished report whose checks did not all pass."""

    def __init__(self, report):
        super().__init__("violations")
        self.report = report


def _spectral(spec):
    out = spec.summary()
    out.update({
        "pencil_evals": spec.pencil_evals,
        "dim_Vm": int(spec.Vm_basis.shape[1]),
        "dim_VM": int(spec.VM_basis.shape[1]),
        "proportional": spec.degenerate,
    })
    return out


def _document(args, mf, spec, payload, suite=None, seed=None):
    return {
        "tool": "wielandt",
        "version": __version__,
        "command": args.command,
        "input": {"file": args.input, "matrix": mf.echo(), "args": _arg_echo(args)},
        "spectral": _spectral(spec),
        "payload": payload,
        "suite": suite,
        "seed": seed,
    }


_ECHO_SKIP = {"command", "input", "verbose", "threads", "func"}


def _arg_echo(args):
    return {k: v for k, v in sorted(vars(args).items()) if k not in _ECHO_SKIP}


def _angles_dict(rep):
    d = dataclasses.asdict(rep)
    for k in ("alpha1", "alpha2"):
        if d[k] is not None:
            d[k] = complex(d[k])
    return d


# --- commands ------------------------------------------------------------

def cmd_analyze(args, mf, pair, spec):
    payload = {
        "pencil_evals": spec.pencil_evals,
        "dim_Vm": int(spec.Vm_basis.shape[1]),
        "dim_VM": int(spec.VM_basis.shape[1]),
        "note": "proportional inner products" if spec.degenerate else None,
    }
    return _document(args, mf, spec, payload)


def cmd_bounds(args, mf, pair, spec):
    have_vectors = args.u is not None or args.v is not None
    if have_vectors == (args.phi is not None):
        raise ParseError("give either --u and --v, or --phi")
    if args.phi is not None:
        intervals = bounds.evaluate_angle(spec, args.phi)
        payload = {"mode": "angle", "phi": args.phi,
                   "intervals": {k: list(v) for k, v in intervals.items()}}
        return _document(args, mf, spec, payload)
    if args.u is None or args.v is None:
        raise ParseError("--u and --v must be given together")
    u = io.parse_vector(args.u, pair.n)
    v = io.parse_vector(args.v, pair.n)
    cls = extremal.classify(spec, pair, u, v)
    reports = bounds.evaluate_pair(spec, pair, u, v)
    payload = {
        "mode": "pair",
        "angles": _angles_dict(full_report(pair, u, v)),
        "bounds": [r.as_dict() for r in reports],
        "classification": cls.as_dict(),
    }
    doc = _document(args, mf, spec, payload)
    if not all(r.holds for r in reports):
        raise _Violation(doc)
    return doc


def cmd_extremal(args, mf, pair, spec):
    if args.kolotilina:
        if args.cos_phi is None:
            raise ParseError("--kolotilina needs --cos-phi")
        # work in G1-orthonormal coordinates, where the first product is Euclidean
        L = linalg.cholesky(pair.G1)
        B = linalg.solve_lower(L, linalg.solve_lower(L, pair.G2).conj().T)
        B = 0.5 * (B + B.conj().T)
        x0, y0 = extremal.construct_kolotilina(B, args.cos_phi)
        lhs, rhs = extremal.kolotilina_sides(B, x0, y0)
        x = linalg.solve_upper(L.conj().T, x0)
        y = linalg.solve_upper(L.conj().T, y0)
        payload = {"mode": "kolotilina", "cos_phi": args.cos_phi, "x": x, "y": y,
                   "lhs": lhs, "rhs": rhs}
        return _document(args, mf, spec, payload)
    if args.angle is None:
        raise ParseError("give --angle or --kolotilina")
    ep = extremal.construct_main(spec, pair, args.angle, args.side)
    cls = extremal.classify(spec, pair, ep.u, ep.v)
    payload = {
        "mode": "main",
        "target": ep.target.value,
        "requested_angle": ep.requested_angle,
        "u": ep.u,
        "v": ep.v,
        "achieved_ratio": ep.achieved_ratio,
        "expected_ratio": spec.kappa if args.side == "right" else 1.0 / spec.kappa,
        "classification": cls.as_dict(),
    }
    return _document(args, mf, spec, payload)


def cmd_verify(args, mf, pair, spec):
    threads = args.threads if args.threads is not None else oracle.default_threads()
    cfg = oracle.OracleConfig(seed=args.seed, trials=args.trials,
                              grid_steps=args.grid, threads=threads)
    tested = spec
    if args.corrupt_m is not None:
        tested = dataclasses.replace(spec, m=spec.m * args.corrupt_m)
    suite = oracle.run_suite(pair, cfg, spec=tested)
    ratios = oracle.ratio_extremes(tested, pair, cfg)
    payload = {"ratio_extremes": ratios.as_dict(),
               "passed": suite.passed and not ratios.violations}
    doc = _document(args, mf, tested, payload, suite=suite.as_dict(), seed=args.seed)
    if not payload["passed"]:
        raise _Violation(doc)
    return doc


# --- plumbing ------------------------------------------------------------

def _positive_int(text):
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return val


def build_parser():
    p = argparse.ArgumentParser(
        prog="wielandt",
        description="Angle distortion between two inner products: bounds, "
                    "equality cases and brute-force verification.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("input", help="matrix file (JSON)")
        sp.add_argument("--verbose", action="store_true", help="summary on stderr")

    sp = sub.add_parser("analyze", help="pencil spectrum and constants")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("bounds", help="evaluate bounds for a vector pair or an angle")
    common(sp)
    sp.add_argument("--u", help="first vector, e.g. 1,0 or 1:0.5,2 (use --u=-1,0 for a leading minus)")
    sp.add_argument("--v", help="second vector")
    sp.add_argument("--phi", type=float, help="abstract input angle in radians")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("extremal", help="construct equality cases")
    common(sp)
    sp.add_argument("--angle", type=float, help="vector angle in (0, pi)")
    sp.add_argument("--side", choices=("right", "left"), default="right")
    sp.add_argument("--kolotilina", action="store_true",
                    help="build the eigenvector mixture for the generalized bound")
    sp.add_argument("--cos-phi", type=float, dest="cos_phi")
    sp.set_defaults(func=cmd_extremal)

    sp = sub.add_parser("verify", help="run the randomized verification suite")
    common(sp)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--trials", type=_positive_int, default=1000)
    sp.add_argument("--grid", type=_positive_int, default=256)
    sp.add_argument("--threads", type=_positive_int, default=None,
                    help="worker threads (default: $WIELANDT_THREADS or CPU count)")
    # fault injection for testing the harness itself
    sp.add_argument("--corrupt-m", type=float, dest="corrupt_m", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)
    return p


def _summary(doc):
    s = doc["spectral"]
    lines = [f"{doc['command']}: m={s['m']:.6g} M={s['M']:.6g} kappa={s['kappa']:.6g} "
             f"chi={s['chi']:.6g} mu={s['mu']:.6g}"]
    if doc["suite"] is not None:
        bad = doc["suite"]["violations"]
        lines.append("suite: " + ("all properties pass" if not bad else "FAILED " + ", ".join(bad)))
    return "\n".join(lines)


def _fail(code, exc):
    print(f"wielandt: error: {exc}", file=sys.stderr)
    return code


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code
    code = EXIT_OK
    try:
        mf = io.load_matrix_file(args.input)
        pair = mf.pair()
        spec = analyze(pair)
        doc = args.func(args, mf, pair, spec)
    except _Violation as v:
        doc, code = v.report, EXIT_VIOLATION
    except (ParseError, DimensionError) as exc:
        return _fail(EXIT_PARSE, exc)
    except (ZeroVector, DependentVectors) as exc:
        return _fail(EXIT_VECTORS, exc)
    except DegeneratePencil as exc:
        return _fail(EXIT_DEGENERATE, exc)
    except WielandtError as exc:
        return _fail(EXIT_NUMERIC, f"{type(exc).__name__}: {exc}")
    except (ArithmeticError, np.linalg.LinAlgError) as exc:
        return _fail(EXIT_NUMERIC, exc)
    sys.stdout.write(io.dumps(doc))
    if args.verbose:
        print(_summary(doc), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
