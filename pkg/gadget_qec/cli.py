"""``gadget-qec`` command line interface.

Exit codes: 0 success, 1 usage / configuration / parse error, 2 nothing discovered
(or, for ``verify``, the distance was not certified), 3 internal invariant violation.
"""

from __future__ import annotations

__author__ = "gadget-qec contributors"

import argparse
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from . import __version__
from .config import TrainConfig, load_config
from .environment.circuit import Circuit, read_circuit
from .exceptions import ConfigError, GadgetQECError, InvariantViolation
from .gadgets.actions import LEVEL_NAMES, enumerate_actions, parse_levels
from .gadgets.gadgets import is_static, make_gadget
from .gadgets.rules import max_propagated_weight, rule_table, weight_curve
from .pipeline.dataset import MANIFEST, read_dataset, write_dataset, write_json
from .pipeline.motifs import motif_frequencies
from .pipeline.preprocessing import dedup, normalize
from .reporting.curves import training_curves
from .reporting.figures import (
    save_figure,
    training_curve_figure,
    weight_box_figure,
    weight_curve_figure,
)
from .stabilizer.code_analysis import (
    QHB_VARIANTS,
    enumerate_errors,
    kl_sum,
    qhb,
    verify_distance_at_least,
    weight_stats,
)
from .trainer.checkpoint import save_checkpoint
from .trainer.curriculum import CurriculumSchedule, compare_levels, run_curriculum

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_DISCOVERY = 2
EXIT_INVARIANT = 3

DATA_DIR = Path(__file__).parent / "data"
STEANE_CIRCUIT = DATA_DIR / "steane.circuit"

# flag -> TrainConfig key, for flags shared by `train` and `compare`
_CONFIG_FLAGS = {
    "n": int,
    "k": int,
    "d": int,
    "levels": str,
    "epochs": int,
    "seed": int,
    "workers": int,
    "n_envs": int,
    "rollout_len": int,
    "p": float,
    "observation": str,
    "connectivity": str,
    "out": str,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ------------------------------------ helpers ------------------------------------
def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="flat 'key = value' config file")
    for key, kind in _CONFIG_FLAGS.items():
        parser.add_argument(f"--{key.replace('_', '-')}", dest=key, type=kind)
    parser.add_argument(
        "--set",
        dest="extra",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="any other config key, e.g. --set entropy_coef=0.02",
    )
    parser.add_argument("--plot", action="store_true", default=None)
    parser.add_argument("--verbose", action="store_true", default=None)


def _config_from_args(args: argparse.Namespace) -> TrainConfig:
    overrides: Dict[str, object] = {key: getattr(args, key) for key in _CONFIG_FLAGS}
    overrides.update(plot=args.plot, verbose=args.verbose)
    for item in args.extra:
        if "=" not in item:
            raise ConfigError(item, "expected KEY=VALUE")
        key, value = item.split("=", 1)
        overrides[key.strip()] = value.strip()
    return load_config(args.config, overrides)


def _read_circuits(directory: Path) -> Tuple[List[Circuit], List[str]]:
    """Circuits of a dataset directory, in manifest or file-name order."""
    if (directory / MANIFEST).exists():
        circuits, manifest = read_dataset(directory)
        return circuits, list(manifest["circuit_id"])
    files = sorted(directory.glob("*.circuit"))
    if not files:
        raise FileNotFoundError(f"no circuits found in {directory}")
    return [read_circuit(f) for f in files], [f.stem for f in files]


def _run_dir(cfg: TrainConfig) -> Path:
    return Path(cfg.out) / f"n{cfg.n}k{cfg.k}d{cfg.d}_{cfg.config_hash()[:8]}"


# ----------------------------------- commands ------------------------------------
def cmd_train(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    schedule = CurriculumSchedule.for_target(cfg.d, cfg.epochs, cfg.epochs_per_stage)
    result = run_curriculum(schedule, cfg)
    out = _run_dir(cfg)
    out.mkdir(parents=True, exist_ok=True)
    result.log.to_csv(out / "train_log.csv", index=False)
    save_checkpoint(
        out / "checkpoint.npz", result.nets, cfg.config_hash(), seed=cfg.seed
    )

    for circuit in result.target_circuits:
        check = verify_distance_at_least(circuit.final_tableau(), circuit.d)
        if check.status == "fail":
            raise InvariantViolation(
                f"a circuit rewarded as [[{circuit.n},{circuit.k},{circuit.d}]] fails "
                f"verification: {', '.join(check.witnesses)}"
            )
    kept, report = dedup(result.target_circuits)
    if kept:
        write_dataset(out / "circuits", kept)
    curves = training_curves(result.log)
    curves.to_csv(out / "curves.csv", index=False)
    if cfg.plot:
        save_figure(training_curve_figure(curves), out / "curves")
    write_json(
        out / "summary.json",
        {**result.summary, "n_distinct": report.n_kept, "config": cfg.to_dict()},
    )
    n_found = len(result.target_circuits)
    print(f"found {n_found} [[{cfg.n},{cfg.k},{cfg.d}]] circuit(s)")
    print(f"dedup: {report}")
    print(f"artifacts in {out}")
    return EXIT_OK if result.success else EXIT_NO_DISCOVERY


def cmd_verify(args: argparse.Namespace) -> int:
    circuit = read_circuit(args.circuit)
    d = circuit.d if args.d is None else args.d
    t = circuit.final_tableau()
    check = verify_distance_at_least(t, d, budget=args.budget)
    print(f"circuit {args.circuit} [[{circuit.n},{circuit.k},{circuit.d}]]")
    print(
        f"distance >= {d}: {check.status.upper()} "
        f"({check.n_checked} errors checked)"
    )
    if check.status != "infeasible" and d <= t.n:
        report = kl_sum(t, enumerate_errors(t.n, d))
        print(f"sigma_kl(d={d}) = {report.sigma_kl:.6g}")
        if args.csv is not None:
            report.breakdown.to_csv(args.csv, index=False)
    for witness in check.witnesses:
        print(f"  undetected: {witness}")
    stats = weight_stats(t)
    print(
        f"generator weights: min={stats.min:g} max={stats.max:g} "
        f"mean={stats.mean:.3f} std={stats.std:.3f}"
    )
    for variant in QHB_VARIANTS:
        res = qhb(circuit.n, circuit.k, d, variant)
        print(
            f"qhb {variant}: {res.status()} ({res.bound_lhs} vs {res.bound_rhs})"
        )
    return EXIT_OK if check.passed else EXIT_NO_DISCOVERY


def cmd_gadgets(args: argparse.Namespace) -> int:
    (level,) = parse_levels([args.level])
    frames = []
    if args.rules:
        table = rule_table(level, args.orientation)
        print("\n".join(table.arrows()))
        frames.append(table.to_frame())
    if args.curve:
        curve = weight_curve()
        print(curve.to_string(index=False))
        frames.append(curve)
        if args.plot is not None:
            save_figure(weight_curve_figure(curve), args.plot)
    if args.actions is not None:
        levels = parse_levels(args.levels) if args.levels else (level,)
        actions = enumerate_actions(args.actions, levels, args.connectivity)
        frame = actions.to_frame()
        print(frame.to_string(index=False))
        frames.append(frame)
    if not frames:
        gadget = make_gadget(level, tuple(range(max(2, 2**level))), args.orientation)
        print(f"{gadget!r}")
        print(f"cx gates: {gadget.n_cx}")
        if level >= 1:
            print(f"max propagated weight: {max_propagated_weight(level)}")
        print(f"static: {is_static(gadget)}")
    if args.csv is not None and frames:
        frames[0].to_csv(args.csv, index=False)
    return EXIT_OK


def cmd_preprocess(args: argparse.Namespace) -> int:
    circuits, ids = _read_circuits(args.directory)
    out = args.out if args.out is not None else args.directory / "preprocessed"
    groups: Dict[Tuple[int, int], List[int]] = {}
    for idx, circuit in enumerate(circuits):
        groups.setdefault((circuit.n, circuit.k), []).append(idx)

    normalized: List[Circuit] = []
    kept_ids: List[str] = []
    for (n, k), members in groups.items():
        kept, report = dedup([circuits[i] for i in members])
        print(f"[[{n},{k}]]: {report}")
        kept_positions = [members[i] for i in report.kept]
        normalized += [normalize(c) for c in kept]
        kept_ids += [ids[i] for i in kept_positions]
    write_dataset(out, normalized, kept_ids)
    motifs = motif_frequencies(
        normalized,
        window=args.window,
        min_length=args.min_length,
        include_init=args.include_init,
        circuit_ids=kept_ids,
    )
    motifs.to_csv(out / "motifs.csv", index=False)
    print(motifs.head(args.top).to_string(index=False))
    print(f"{len(normalized)} circuit(s) written to {out}")
    return EXIT_OK


def cmd_qhb(args: argparse.Namespace) -> int:
    variants = [args.variant] if args.variant else list(QHB_VARIANTS)
    for variant in variants:
        res = qhb(args.n, args.k, args.d, variant)
        relation = "=" if res.perfect else (">" if res.satisfied else "<")
        print(
            f"[[{res.n},{res.k},{res.d}]] {variant}: t={res.t} "
            f"{res.bound_lhs} {relation} {res.bound_rhs} -> {res.status()}"
            + (" (even d, evaluated at floor((d-1)/2))" if res.even_d else "")
        )
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    rows, weights = [], {}
    for directory in args.directories:
        circuits, _ = _read_circuits(directory)
        if not circuits:
            print(f"error: dataset {directory} lists no circuits", file=sys.stderr)
            return EXIT_USAGE
        pooled = np.concatenate([c.final_tableau().row_weights() for c in circuits])
        weights[directory.name] = pooled
        per_type = {
            f"w_mean_{kind.lower()}": np.mean(
                [weight_stats(c.final_tableau(), kind).mean for c in circuits]
            )
            for kind in ("X", "Z")
        }
        rows.append(
            {
                "dataset": directory.name,
                "n_circuits": len(circuits),
                "w_min": int(pooled.min()),
                "w_max": int(pooled.max()),
                "w_mean": float(pooled.mean()),
                "w_std": float(pooled.std()),
                **per_type,
            }
        )
    table = pd.DataFrame(rows)
    print(table.to_string(index=False))
    if args.csv is not None:
        table.to_csv(args.csv, index=False)
    if args.plot is not None:
        save_figure(weight_box_figure(weights), args.plot)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    level_sets = [parse_levels(levels) for levels in args.level_sets]
    seeds = args.seeds if args.seeds else list(cfg.seeds)
    per_run, summary = compare_levels(cfg, level_sets, seeds)
    out = _run_dir(cfg)
    out.mkdir(parents=True, exist_ok=True)
    per_run.to_csv(out / "compare_runs.csv", index=False)
    summary.to_csv(out / "compare_summary.csv", index=False)
    print(summary.to_string(index=False))
    return EXIT_OK if per_run["success"].any() else EXIT_NO_DISCOVERY


# ------------------------------------ parser -------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="gadget-qec",
        description="Discover CSS encoding circuits with gadget-augmented MAXPPO.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="run the distance curriculum")
    _add_config_flags(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("verify", help="certify the distance of a circuit file")
    p.add_argument("circuit", type=Path, nargs="?", default=STEANE_CIRCUIT)
    p.add_argument("--d", type=int, help="distance to certify (default: the file's)")
    p.add_argument("--budget", type=int, default=2_000_000)
    p.add_argument("--csv", type=Path, help="write the per-weight KL breakdown")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gadgets", help="inspect gadgets, rule tables, action tables")
    p.add_argument("--level", default="2", help=f"0..5 or {', '.join(LEVEL_NAMES)}")
    p.add_argument("--orientation", choices=("A", "B"), default="A")
    p.add_argument("--rules", action="store_true", help="print the rule table")
    p.add_argument("--curve", action="store_true", help="maximal weight per level")
    p.add_argument("--actions", type=int, metavar="N", help="action table on N qubits")
    p.add_argument("--levels", help="levels of the action table (default --level)")
    p.add_argument("--connectivity", choices=("ring", "complete"), default="ring")
    p.add_argument("--csv", type=Path)
    p.add_argument("--plot", type=Path, help="weight-curve figure file")
    p.set_defaults(func=cmd_gadgets)

    p = sub.add_parser("preprocess", help="dedup, normalize and mine motifs")
    p.add_argument("directory", type=Path)
    p.add_argument("--out", type=Path)
    p.add_argument("--window", type=int, default=8)
    p.add_argument("--min-length", type=int, default=2)
    p.add_argument("--include-init", action="store_true")
    p.add_argument("--top", type=int, default=10)
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("qhb", help="evaluate the quantum Hamming bound")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--variant", choices=QHB_VARIANTS)
    p.set_defaults(func=cmd_qhb)

    p = sub.add_parser("stats", help="generator-weight statistics per dataset")
    p.add_argument("directories", type=Path, nargs="+")
    p.add_argument("--csv", type=Path)
    p.add_argument("--plot", type=Path, help="box-plot figure file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("compare", help="epochs to success per gadget level set")
    _add_config_flags(p)
    p.add_argument("--level-sets", nargs="+", required=True, metavar="LEVELS")
    p.add_argument("--seeds", type=int, nargs="+")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as err:
        print(f"invariant violation: {err}", file=sys.stderr)
        return EXIT_INVARIANT
    except (GadgetQECError, ValueError, KeyError, FileNotFoundError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
