"""Command-line front end.

Subcommands: density, coherence, certify kernel|uncertainty|omp, run-omp,
probe-kernel, experiment.  Reports print as JSON; the experiment harness
writes per-trial and summary CSV files that are byte-identical across reruns
with the same config.

Exit codes: 0 success / certified, 1 not certified, 2 usage or input error,
3 soundness violation (a certified trial failed recovery, or a kernel probe
found a density below the certified threshold; either would falsify the
underlying guarantee and should be reported as a bug).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .certificates import (
    kernel_certificate,
    omp_guarantee,
    uncertainty_check,
)
from .coherence import coherence, mutual_coherence
from .core import (
    Dictionary,
    Signal,
    concat_dictionaries,
    hadamard_dictionary,
    identity_dictionary,
    make_dictionary,
    make_rng,
    random_unit_dictionary,
)
from .density import density_report, sparsity
from .errors import LowDensityError
from .fileio import read_matrix, read_signal
from .omp import OmpTrace, omp_run
from .oracle import probe_kernel_density

UNCERTAINTY_TOL = 1e-9
RECOVERY_REL_TOL = 1e-8


# ---------------------------------------------------------------------------
# Experiment harness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExperimentConfig:
    """Parsed experiment description; field names mirror the JSON config keys."""

    dictionary_spec: dict
    signal_family: str
    k_values: tuple[int, ...]
    alpha: float | None
    signal_file: str | None
    trial_count: int
    base_seed: int
    t_max_policy: str
    t_max: int | None
    output: str


@dataclass(frozen=True)
class TrialRecord:
    """One Monte-Carlo trial: certificates checked, solver run, recovery judged."""

    trial: int
    seed: int
    k: int
    certified: bool
    classically_certified: bool
    exact_recovery: bool
    residual_norm: float


def load_experiment_config(path: str) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    spec = raw.get("dictionary_spec")
    if not isinstance(spec, dict):
        raise ValueError("config needs a dictionary_spec object")
    family = raw.get("signal_family")
    if family not in ("constant-modulus", "alpha-decaying", "file"):
        raise ValueError(f"unknown signal_family {family!r}")
    k_raw = raw.get("k", [])
    k_values = tuple(int(k) for k in (k_raw if isinstance(k_raw, list) else [k_raw]))
    if family != "file" and not k_values:
        raise ValueError("config needs k (an integer or list of integers)")
    alpha = raw.get("alpha")
    if family == "alpha-decaying" and alpha is None:
        raise ValueError("alpha-decaying family needs alpha")
    signal_file = raw.get("signal_file")
    if family == "file" and not signal_file:
        raise ValueError("file family needs signal_file")
    trial_count = int(raw.get("trial_count", 0))
    if trial_count < 1:
        raise ValueError(f"trial_count must be at least 1, got {trial_count}")
    policy = raw.get("t_max_policy", "equal-to-k")
    if policy not in ("fixed", "equal-to-k"):
        raise ValueError(f"unknown t_max_policy {policy!r}")
    t_max = raw.get("t_max")
    if policy == "fixed" and t_max is None:
        raise ValueError("fixed t_max_policy needs t_max")
    output = raw.get("output")
    if not output:
        raise ValueError("config needs an output path stem")
    return ExperimentConfig(
        dictionary_spec=spec,
        signal_family=family,
        k_values=k_values if k_values else (0,),
        alpha=None if alpha is None else float(alpha),
        signal_file=signal_file,
        trial_count=trial_count,
        base_seed=int(raw.get("base_seed", 0)),
        t_max_policy=policy,
        t_max=None if t_max is None else int(t_max),
        output=str(output),
    )


def build_dictionary_from_spec(spec: dict, base_seed: int) -> Dictionary:
    if "file" in spec:
        return make_dictionary(read_matrix(spec["file"]))
    name = spec.get("name")
    if name == "identity":
        return identity_dictionary(int(spec["m"]))
    if name == "hadamard":
        return hadamard_dictionary(int(spec["m"]))
    if name == "concat_identity_hadamard":
        m = int(spec["m"])
        return concat_dictionaries(identity_dictionary(m), hadamard_dictionary(m))
    if name == "random_unit":
        seed = int(spec.get("seed", base_seed))
        return random_unit_dictionary(int(spec["m"]), int(spec["n"]), make_rng(seed))
    raise ValueError(f"unknown dictionary spec {spec!r}")


def _draw_trial_signal(config: ExperimentConfig, n: int, k: int, rng) -> Signal:
    """Random support placement and phase randomization for the synthetic families."""
    if config.signal_family == "file":
        return read_signal(config.signal_file)
    if config.signal_family == "constant-modulus":
        magnitudes = np.ones(k)
    else:
        magnitudes = config.alpha ** np.arange(k, dtype=np.float64)
    support = rng.choice(n, size=k, replace=False)
    phases = np.exp(2j * np.pi * rng.uniform(0.0, 1.0, size=k))
    entries = np.zeros(n, dtype=np.complex128)
    entries[support] = magnitudes * phases
    return Signal(entries)


def run_trial(a: Dictionary, config: ExperimentConfig, k: int, trial: int, seed: int) -> TrialRecord:
    rng = make_rng(seed)
    x = _draw_trial_signal(config, a.cols, k, rng)
    k_actual = sparsity(x)
    t_max = config.t_max if config.t_max_policy == "fixed" else max(k_actual, 1)

    report = omp_guarantee(a, x, t_max)
    classically_certified = k_actual < report.classical_threshold

    y = Signal(a.matrix @ x.entries)
    trace = omp_run(a, y, t_max)
    estimate = trace.estimate()
    support_match = trace.support.as_set() == frozenset(np.flatnonzero(x.entries).tolist())
    coeff_err = float(np.linalg.norm(estimate.entries - x.entries))
    exact = support_match and coeff_err <= RECOVERY_REL_TOL * float(np.linalg.norm(x.entries))
    return TrialRecord(
        trial=trial,
        seed=seed,
        k=k_actual,
        certified=report.certified,
        classically_certified=classically_certified,
        exact_recovery=exact,
        residual_norm=trace.residual_norms[-1],
    )


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_trials_csv(path: str, records: list[TrialRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            ["trial", "seed", "k", "certified", "classically_certified",
             "exact_recovery", "residual_norm"]
        )
        for r in records:
            writer.writerow(
                [_fmt(r.trial), _fmt(r.seed), _fmt(r.k), _fmt(r.certified),
                 _fmt(r.classically_certified), _fmt(r.exact_recovery),
                 _fmt(r.residual_norm)]
            )


def write_summary_csv(path: str, records: list[TrialRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            ["k", "delta_certified_rate", "classical_certified_rate", "exact_recovery_rate"]
        )
        for k in sorted({r.k for r in records}):
            group = [r for r in records if r.k == k]
            count = float(len(group))
            writer.writerow(
                [_fmt(k),
                 _fmt(sum(r.certified for r in group) / count),
                 _fmt(sum(r.classically_certified for r in group) / count),
                 _fmt(sum(r.exact_recovery for r in group) / count)]
            )


def run_experiment(config: ExperimentConfig) -> tuple[list[TrialRecord], int]:
    """All trials of an experiment; returns the records and the count of soundness violations."""
    a = build_dictionary_from_spec(config.dictionary_spec, config.base_seed)
    records = []
    seed_counter = 1
    for k in config.k_values:
        for trial in range(config.trial_count):
            record = run_trial(a, config, k, trial, config.base_seed + seed_counter)
            records.append(record)
            seed_counter += 1
    violations = sum(1 for r in records if r.certified and not r.exact_recovery)
    return records, violations


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, indent=None if args.json else 2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_dictionary(path: str) -> Dictionary:
    return make_dictionary(read_matrix(path))


def cmd_density(args) -> int:
    report = density_report(read_signal(args.signal))
    _emit(args, {
        "delta": report.delta,
        "gamma": report.gamma,
        "sigma": report.sigma,
        "sparsity": report.sparsity,
        "dim": report.dim,
    })
    return 0


def cmd_coherence(args) -> int:
    a = _load_dictionary(args.dictionary)
    if args.other is None:
        report = coherence(a)
        pair = None if report.argmax_pair is None else list(report.argmax_pair)
        _emit(args, {"mu": report.mu, "argmax_pair": pair})
    else:
        report = mutual_coherence(a, _load_dictionary(args.other))
        _emit(args, {"mu_m": report.mu_m, "argmax_pair": list(report.argmax_pair)})
    return 0


def cmd_certify_kernel(args) -> int:
    cert = kernel_certificate(_load_dictionary(args.dictionary), read_signal(args.signal))
    _emit(args, cert.to_json_dict())
    return 0 if cert.certified_nonzero else 1


def cmd_certify_uncertainty(args) -> int:
    a = _load_dictionary(args.dictionary_a)
    b = _load_dictionary(args.dictionary_b)
    x = read_signal(args.signal_x)
    z = read_signal(args.signal_z)
    report = uncertainty_check(a, b, x, z)
    ax_norm = float(np.linalg.norm(a.matrix @ x.entries))
    applicable = report.constraint_residual <= UNCERTAINTY_TOL * (ax_norm + 1.0)
    holds = applicable and report.lhs <= report.rhs + UNCERTAINTY_TOL
    payload = report.to_json_dict()
    payload["certified"] = holds
    _emit(args, payload)
    return 0 if holds else 1


def cmd_certify_omp(args) -> int:
    report = omp_guarantee(
        _load_dictionary(args.dictionary), read_signal(args.signal), args.t_max
    )
    _emit(args, report.to_json_dict())
    return 0 if report.certified else 1


def cmd_run_omp(args) -> int:
    trace = omp_run(
        _load_dictionary(args.dictionary),
        read_signal(args.measurement),
        args.t_max,
        residual_tol=args.residual_tol,
    )
    _emit(args, trace.to_json_dict())
    return 0


def cmd_probe_kernel(args) -> int:
    result = probe_kernel_density(
        _load_dictionary(args.dictionary), args.trials, make_rng(args.seed)
    )
    _emit(args, result.to_json_dict())
    if result.min_delta_found < result.threshold - UNCERTAINTY_TOL:
        print("soundness violation: kernel vector below certified threshold", file=sys.stderr)
        return 3
    return 0


def cmd_experiment(args) -> int:
    config = load_experiment_config(args.config)
    if args.out:
        config = ExperimentConfig(**{**config.__dict__, "output": args.out})
    records, violations = run_experiment(config)
    out_dir = os.path.dirname(config.output)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
    trials_path = config.output + "_trials.csv"
    summary_path = config.output + "_summary.csv"
    write_trials_csv(trials_path, records)
    write_summary_csv(summary_path, records)
    print(f"wrote {trials_path}")
    print(f"wrote {summary_path}")
    if violations:
        print(
            f"soundness violation: {violations} certified trial(s) failed recovery",
            file=sys.stderr,
        )
        return 3
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", default=None,
                        help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--json", action="store_true",
                        help="compact single-line JSON instead of indented")

    parser = argparse.ArgumentParser(
        prog="lowdensity",
        description="Density-aware sparse recovery: measures, certificates, solver, experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density", parents=[common], help="density measures of a signal file")
    p.add_argument("signal")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("coherence", parents=[common],
                       help="coherence of a dictionary, or mutual coherence of a pair")
    p.add_argument("dictionary")
    p.add_argument("other", nargs="?", default=None)
    p.set_defaults(func=cmd_coherence)

    certify = sub.add_parser("certify", help="evaluate a certificate")
    csub = certify.add_subparsers(dest="certificate", required=True)

    p = csub.add_parser("kernel", parents=[common],
                        help="is x provably outside the kernel of A?")
    p.add_argument("dictionary")
    p.add_argument("signal")
    p.set_defaults(func=cmd_certify_kernel)

    p = csub.add_parser("uncertainty", parents=[common],
                        help="density uncertainty inequality for Ax = Bz")
    p.add_argument("dictionary_a")
    p.add_argument("dictionary_b")
    p.add_argument("signal_x")
    p.add_argument("signal_z")
    p.set_defaults(func=cmd_certify_uncertainty)

    p = csub.add_parser("omp", parents=[common],
                        help="static guarantee that t_max greedy iterations succeed")
    p.add_argument("dictionary")
    p.add_argument("signal")
    p.add_argument("--t-max", type=int, required=True)
    p.set_defaults(func=cmd_certify_omp)

    p = sub.add_parser("run-omp", parents=[common], help="run the solver on a measurement")
    p.add_argument("dictionary")
    p.add_argument("measurement")
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--residual-tol", type=float, default=None)
    p.set_defaults(func=cmd_run_omp)

    p = sub.add_parser("probe-kernel", parents=[common],
                       help="search the kernel for low-density vectors")
    p.add_argument("dictionary")
    p.add_argument("--trials", type=int, default=1000)
    p.set_defaults(func=cmd_probe_kernel)

    p = sub.add_parser("experiment", parents=[common],
                       help="Monte-Carlo recovery experiment from a JSON config")
    p.add_argument("config")
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LowDensityError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
