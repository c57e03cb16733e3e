"""
Command line driver.

Subcommands: eval, certify, probe, theorem1, case-check, criteria, maximal.
Reports are written as JSON (sorted keys, shortest round-trip floats) or
CSV (17 significant digits).

Exit codes: 0 ok / certified, 2 usage or parse error, 3 approximate or
inconclusive, 4 refuted or violation, 5 numerical failure.
"""

import argparse
import json
import sys
import time
import numpy as np
import pandas as pd
from . import __version__
from .base import ReprMixin, CERT_TOL, QUAD_TOL, ROOT_TOL
from .errors import (
    BlaschkeError, NumericalError, SandwichViolation, CriticalMismatchError,
    MultiplicityError
)
from .composition import (
    preimage_decomposition_check, case2a_check, case2b_check
)
from .criteria import criteria_report
from .experiments import run_case_trials, theorem1_trials
from .indestructibility import certify_indestructible, probe_table, ring_grid
from .maximal import CriticalSet, solve_maximal, verify_maximal
from .products import product_from_dict
from .utils.misc import parse_complex, complex2pair
import logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_APPROXIMATE = 3
EXIT_VIOLATION = 4
EXIT_NUMERICAL = 5
PRNG = "PCG64"
DEFAULT_SCHEDULE = "0.5,0.9,0.99,0.999"


def parse_rings(text):
    "'0.35:32,0.7:32' -> [(0.35, 32), (0.7, 32)]"
    rings = []
    for item in filter(None, text.split(",")):
        radius, count = item.split(":")
        rings.append((float(radius), int(count)))
    return rings


def parse_schedule(text):
    return [float(r) for r in filter(None, text.split(","))]


def load_json(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def load_model(path):
    return product_from_dict(load_json(path))


def to_jsonable(obj):
    "json default for numpy scalars, arrays and complex numbers"
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, complex):
        return complex2pair(obj)
    raise TypeError(f"{type(obj).__name__} is not json serializable")


class ExperimentConfig(ReprMixin):
    """Configuration echoed into every run record.

    Parameters
    ----------
    - command : subcommand name
    - model_paths : input files
    - grid : dict(rings=[(radius, count), ...], points=[a, ...])
    - r_schedule : radii
    - tolerances : dict(quad_tol, cert_tol, root_tol)
    - seed : PRNG seed
    - output : dict(path, format)
    """

    def __init__(self, command, model_paths, grid, r_schedule, tolerances,
                 seed, output):
        if any(tol <= 0 for tol in tolerances.values()):
            raise ValueError(f"tolerances must be positive: {tolerances}")
        if np.any(np.diff(r_schedule) <= 0):
            raise ValueError(f"r_schedule={r_schedule} is not increasing")
        self.command = command
        self.model_paths = model_paths
        self.grid = grid
        self.r_schedule = r_schedule
        self.tolerances = tolerances
        self.seed = seed
        self.output = output
        self.repr_init()

    @classmethod
    def from_args(cls, args):
        paths = [
            getattr(args, key) for key in ["model", "model_b", "model_c", "critical_set"]
            if getattr(args, key, None)
        ]
        grid = dict(
            rings=parse_rings(args.grid_rings),
            points=[complex2pair(parse_complex(a)) for a in args.a or []]
        )
        return cls(
            command=args.command, model_paths=paths, grid=grid,
            r_schedule=parse_schedule(args.r_schedule),
            tolerances=dict(
                quad_tol=args.tol_quad, cert_tol=args.tol_cert,
                root_tol=args.tol_root
            ),
            seed=args.seed, output=dict(path=args.out, format=args.format)
        )

    def grid_points(self):
        points = [complex(re, im) for re, im in self.grid["points"]]
        return np.concatenate([ring_grid(self.grid["rings"]), np.array(points, dtype=complex)])

    def to_dict(self):
        return dict(
            command=self.command, model_paths=self.model_paths, grid=self.grid,
            r_schedule=self.r_schedule, tolerances=self.tolerances,
            seed=self.seed, prng=PRNG, output=self.output
        )


class RunRecord(ReprMixin):
    """Config echo, version and reports of one run.

    Wall time is recorded only on request so that records stay
    byte-identical across runs.
    """

    def __init__(self, config, reports, wall_time=None):
        self.config = config
        self.reports = reports
        self.wall_time = wall_time
        self.repr_init()

    def to_dict(self):
        record = dict(
            config=self.config.to_dict(), version=__version__, reports=self.reports
        )
        if self.wall_time is not None:
            record["wall_time"] = self.wall_time
        return record


def write_output(args, record, table=None):
    "JSON run record, or the CSV table when --format csv"
    if args.format == "csv":
        if table is None:
            raise ValueError(f"{args.command} has no csv output")
        text = table.to_csv(index=False, float_format="%.17g")
    else:
        text = json.dumps(
            record.to_dict(), sort_keys=True, indent=2, default=to_jsonable
        ) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_eval(args, config):
    model = load_model(args.model)
    records = []
    for text in args.z:
        z = parse_complex(text)
        log_mod = model.log_modulus(z, args.tol_eval)
        records.append(dict(
            z=complex2pair(z), value=complex2pair(model(z)),
            log_modulus=log_mod.value, err=log_mod.err, at_zero=log_mod.at_zero,
            level=log_mod.level
        ))
    table = pd.DataFrame([
        dict(z_re=r["z"][0], z_im=r["z"][1], value_re=r["value"][0],
             value_im=r["value"][1], log_modulus=r["log_modulus"], err=r["err"])
        for r in records
    ])
    return dict(model=model.to_dict(), evaluations=records), table, EXIT_OK


def cmd_certify(args, config):
    model = load_model(args.model)
    grid = config.grid_points() if (args.grid_rings or args.a) else None
    report = certify_indestructible(model, grid, config.tolerances["cert_tol"])
    code = dict(certified=EXIT_OK, approximate=EXIT_APPROXIMATE, refuted=EXIT_VIOLATION)
    return report.to_dict(), report.to_dataframe(), code[report.verdict]


def cmd_probe(args, config):
    model = load_model(args.model)
    table = probe_table(
        model, config.grid_points(), config.r_schedule, config.tolerances["quad_tol"]
    )
    code = EXIT_APPROXIMATE if (table.verdict == "inconclusive").any() else EXIT_OK
    return dict(probe=table.to_dict(orient="records")), table, code


def cmd_theorem1(args, config):
    table = theorem1_trials(
        args.deg_b, args.deg_c, args.trials, args.seed, config.tolerances["cert_tol"]
    )
    if "error" in table.columns and table.error.notna().any():
        return dict(trials=table.to_dict(orient="records")), table, EXIT_NUMERICAL
    if (table.verdict == "refuted").any():
        code = EXIT_VIOLATION
    elif (table.verdict != "certified").any():
        code = EXIT_APPROXIMATE
    else:
        code = EXIT_OK
    summary = dict(
        trials=len(table), certified=int((table.verdict == "certified").sum()),
        m1_max=float(table.m1_max.max()), m2_max=float(table.m2_residual.max())
    )
    return dict(summary=summary, trials=table.to_dict(orient="records")), table, code


def cmd_case_check(args, config):
    if args.trials:
        table = run_case_trials(args.case, args.trials, args.seed, args.deg_b, args.deg_c)
        if "error" in table.columns and table.error.notna().any():
            code = EXIT_NUMERICAL
        else:
            code = EXIT_VIOLATION if (table.residual > args.tol_case).any() else EXIT_OK
        return dict(trials=table.to_dict(orient="records")), table, code
    B, C = load_model(args.model_b), load_model(args.model_c)
    if args.case == "I":
        if not args.a:
            raise ValueError("case I needs a target --a")
        report = preimage_decomposition_check(B, C, parse_complex(args.a[0]))
    elif args.case == "IIa":
        report = case2a_check(B, C)
    else:
        report = case2b_check(B, C)
    table = pd.DataFrame([dict(
        case_tag=report.case_tag, degB=B.degree, degC=C.degree,
        residual=report.residual, matching_distance=report.matching_distance
    )])
    code = EXIT_VIOLATION if report.residual > args.tol_case else EXIT_OK
    return report.to_dict(), table, code


def cmd_criteria(args, config):
    model = load_model(args.model)
    report = criteria_report(model, config.r_schedule, config.tolerances["quad_tol"])
    code = EXIT_APPROXIMATE if report.verdict == "inconclusive" else EXIT_OK
    return report.to_dict(), report.to_dataframe(), code


def cmd_maximal(args, config):
    C = CriticalSet.from_dict(load_json(args.critical_set))
    F = solve_maximal(C, args.tol_match)
    report = verify_maximal(F, C, args.tol_match, config.tolerances["cert_tol"])
    table = pd.DataFrame([dict(re=a.real, im=a.imag) for a in F.zeros])
    code = EXIT_OK if report.passed else EXIT_VIOLATION
    return dict(model=F.to_dict(), report=report.to_dict()), table, code


COMMANDS = {
    "eval": cmd_eval,
    "certify": cmd_certify,
    "probe": cmd_probe,
    "theorem1": cmd_theorem1,
    "case-check": cmd_case_check,
    "criteria": cmd_criteria,
    "maximal": cmd_maximal
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid-rings", default="", help="rings 'radius:count,...'")
    common.add_argument("--a", action="append", help="extra target point, repeatable")
    common.add_argument("--r-schedule", default=DEFAULT_SCHEDULE, help="radii 'r1,r2,...'")
    common.add_argument("--tol-quad", type=float, default=QUAD_TOL)
    common.add_argument("--tol-cert", type=float, default=CERT_TOL)
    common.add_argument("--tol-root", type=float, default=ROOT_TOL)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="output file (stdout by default)")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--timing", action="store_true", help="record the wall time")
    common.add_argument("--verbose", "-v", action="store_true")

    parser = argparse.ArgumentParser(
        prog="blaschke", description="Numerical experiments with Blaschke products."
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("eval", parents=[common], help="evaluate a model")
    p.add_argument("--model", required=True)
    p.add_argument("--z", action="append", required=True, help="point, repeatable")
    p.add_argument("--tol-eval", type=float, default=None,
                   help="log-modulus error target for truncated products")

    p = subparsers.add_parser("certify", parents=[common], help="indestructibility certificate")
    p.add_argument("--model", required=True)

    p = subparsers.add_parser("probe", parents=[common], help="singular mass of Frostman shifts")
    p.add_argument("--model", required=True)

    p = subparsers.add_parser("theorem1", parents=[common], help="certify random compositions")
    p.add_argument("--deg-b", type=int, default=3)
    p.add_argument("--deg-c", type=int, default=3)
    p.add_argument("--trials", type=int, default=10)

    p = subparsers.add_parser("case-check", parents=[common], help="composition identities")
    p.add_argument("case", choices=["I", "IIa", "IIb"])
    p.add_argument("--model-b")
    p.add_argument("--model-c")
    p.add_argument("--trials", type=int, default=0, help="random instances instead of models")
    p.add_argument("--deg-b", type=int, default=3)
    p.add_argument("--deg-c", type=int, default=2)
    p.add_argument("--tol-case", type=float, default=1e-6)

    p = subparsers.add_parser("criteria", parents=[common], help="radial log-integral criterion")
    p.add_argument("--model", required=True)

    p = subparsers.add_parser("maximal", parents=[common], help="maximal Blaschke product")
    p.add_argument("--critical-set", required=True)
    p.add_argument("--tol-match", type=float, default=1e-7)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s"
    )
    start = time.perf_counter()
    try:
        config = ExperimentConfig.from_args(args)
        if args.command == "case-check" and not args.trials and not (args.model_b and args.model_c):
            raise ValueError("case-check needs --model-b and --model-c or --trials")
        reports, table, code = COMMANDS[args.command](args, config)
        wall_time = time.perf_counter() - start if args.timing else None
        write_output(args, RunRecord(config, reports, wall_time), table)
    except (SandwichViolation, CriticalMismatchError, MultiplicityError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_VIOLATION
    except NumericalError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_NUMERICAL
    except (ValueError, KeyError, TypeError, OSError, BlaschkeError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
