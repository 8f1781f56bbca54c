"""Conjecture-testing driver: oracles, greedy run and per-instance verdicts."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import re
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Sequence, Union

from .coloring import RunTrace, check_admissible, conditional_greedy, dump_coloring, dump_trace
from .density import DensityResult, density
from .generators import InstanceSpec, generate
from .multigraph import Multigraph, is_connected, serialize, stats
from .oracles import MAX_NAIVE_VERTICES, chromatic_index, naive_admissible, validate_coloring
from .ordering import reorder

log = logging.getLogger(__name__)

CANDIDATE_FAILURE = "CONJECTURE-CANDIDATE-FAILURE"
DENSITY_MISMATCH = "DENSITY-MISMATCH"

KPolicy = Union[str, int]


def resolve_k(policy: KPolicy, dens: DensityResult) -> int:
    if policy == "omega":
        return dens.omega
    if policy == "fractional":
        return dens.fractional_index
    k = int(policy)
    if k < 1:
        raise ValueError("explicit k must be >= 1")
    return k


def parse_k(text: str) -> KPolicy:
    if text in ("omega", "fractional"):
        return text
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"--k expects omega, fractional or a positive integer, got {text!r}") from None
    if value < 1:
        raise ValueError("--k must be >= 1")
    return value


@dataclass
class ReportRow:
    instance: str
    spec: str
    seed: int
    n: int
    m: int
    max_degree: int
    max_multiplicity: int
    omega: int
    chi_prime: int
    k: int
    conjecture_applicable: bool
    greedy_complete: bool
    halt_step: Optional[int]
    violation: str
    flag: str
    wall_time: float = 0.0


@dataclass
class InstanceRun:
    spec: InstanceSpec
    graph: Multigraph
    row: ReportRow
    trace: RunTrace


@dataclass
class ExperimentReport:
    runs: List[InstanceRun] = field(default_factory=list)

    @property
    def rows(self) -> List[ReportRow]:
        return [r.row for r in self.runs]

    @property
    def applicable(self) -> int:
        return sum(r.conjecture_applicable for r in self.rows)

    @property
    def completions(self) -> int:
        return sum(r.greedy_complete for r in self.rows)

    @property
    def halts(self) -> int:
        return sum(not r.greedy_complete for r in self.rows)

    @property
    def failures(self) -> List[InstanceRun]:
        return [r for r in self.runs if r.row.flag]

    def summary(self) -> str:
        return (f"instances={len(self.runs)} applicable={self.applicable} "
                f"complete={self.completions} halted={self.halts} "
                f"candidate_failures={len(self.failures)}")

    def to_csv(self, timing: bool = False) -> str:
        names = [f for f in ReportRow.__dataclass_fields__ if timing or f != "wall_time"]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(names)
        for row in self.rows:
            d = asdict(row)
            writer.writerow(["" if d[f] is None else d[f] for f in names])
        return buf.getvalue()


def _violation_text(trace: RunTrace) -> str:
    if trace.halt_step is None:
        return ""
    bad = trace.steps[-1].violation
    if bad is None:
        return "no proper color"
    return f"S={' '.join(map(str, bad.subset))};cover={bad.cover};uncolored={bad.uncolored_inside}"


def run_instance(spec: InstanceSpec, k_policy: KPolicy = "omega", strict: bool = False,
                 verify: bool = True, force: bool = False,
                 graph: Optional[Multigraph] = None) -> InstanceRun:
    g = graph if graph is not None else generate(spec)
    if not is_connected(g) or g.m == 0:
        raise ValueError(f"{spec.label}: the greedy needs a connected multigraph with edges")
    start = time.perf_counter()
    st = stats(g)
    dens = density(g, force=force)
    chi = chromatic_index(g, force=force).chi_prime
    k = resolve_k(k_policy, dens)
    applicable = chi > st.max_degree + 1
    flag = ""
    if applicable and chi != dens.omega:
        flag = DENSITY_MISMATCH
        log.warning("%s: chi'=%d > Delta+1 but omega=%d", spec.label, chi, dens.omega)

    audit = None
    if verify and g.n <= MAX_NAIVE_VERTICES:
        audit = lambda h, phi: naive_admissible(h, phi, strict)  # noqa: E731
    trace = conditional_greedy(g, k, reorder(g), strict=strict, audit=audit)
    phi = trace.final
    if not validate_coloring(g, phi) or any(c is not None and not 1 <= c <= k for c in phi.assignment):
        raise AssertionError(f"{spec.label}: greedy produced an invalid coloring")
    if verify and check_admissible(g, phi, strict) is not None:
        raise AssertionError(f"{spec.label}: final coloring is not admissible")
    if applicable and not trace.complete and k == dens.omega and not flag:
        flag = CANDIDATE_FAILURE
        log.warning("%s: candidate failure, halted at step %s", spec.label, trace.halt_step)

    row = ReportRow(
        instance=g.name or spec.label,
        spec=spec.label,
        seed=spec.seed,
        n=g.n,
        m=g.m,
        max_degree=st.max_degree,
        max_multiplicity=st.max_multiplicity,
        omega=dens.omega,
        chi_prime=chi,
        k=k,
        conjecture_applicable=applicable,
        greedy_complete=trace.complete,
        halt_step=trace.halt_step,
        violation=_violation_text(trace),
        flag=flag,
        wall_time=round(time.perf_counter() - start, 6),
    )
    return InstanceRun(spec, g, row, trace)


def run_experiment(specs: Sequence[InstanceSpec], k_policy: KPolicy = "omega",
                   strict: bool = False, verify: bool = True, force: bool = False) -> ExperimentReport:
    report = ExperimentReport()
    for spec in specs:
        report.runs.append(run_instance(spec, k_policy, strict, verify, force))
    return report


def _slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.=-]+", "_", text).strip("_")


def write_traces(report: ExperimentReport, directory: str) -> None:
    os.makedirs(directory, exist_ok=True)
    for i, run in enumerate(report.runs):
        path = os.path.join(directory, f"{i:04d}_{_slug(run.spec.label)}.trace")
        with open(path, "w") as fh:
            fh.write(dump_trace(run.graph, run.trace))


def write_failure_bundles(report: ExperimentReport, directory: str) -> List[str]:
    """One directory per flagged instance with instance, trace, coloring and spec."""
    paths = []
    for i, run in enumerate(report.runs):
        if not run.row.flag:
            continue
        out = os.path.join(directory, f"{i:04d}_{_slug(run.spec.label)}")
        os.makedirs(out, exist_ok=True)
        with open(os.path.join(out, "instance.mg"), "w") as fh:
            fh.write(serialize(run.graph))
        with open(os.path.join(out, "trace.jsonl"), "w") as fh:
            fh.write(dump_trace(run.graph, run.trace))
        with open(os.path.join(out, "partial.coloring"), "w") as fh:
            fh.write(dump_coloring(run.trace.final))
        with open(os.path.join(out, "spec.json"), "w") as fh:
            record = {"family": run.spec.family, "params": list(run.spec.params),
                      "seed": run.spec.seed, "row": {k: v for k, v in asdict(run.row).items()
                                                     if k != "wall_time"}}
            json.dump(record, fh, indent=2, sort_keys=True)
            fh.write("\n")
        paths.append(out)
    return paths


def load_spec(path: str) -> InstanceSpec:
    """Rebuild an InstanceSpec from a bundle's ``spec.json``."""
    with open(path) as fh:
        record = json.load(fh)
    return InstanceSpec(record["family"], tuple(record["params"]), record["seed"])
