"""Run a claim over a corpus and collect a report."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Iterator, Optional, Union

from ..graphcore import Graph
from ..graphio import emit_graph6, read_graphs
from ..recognizers import BudgetExceeded, is_berge
from ..validators import naive_berge
from .claims import BINDING_BUDGET, BindingOverflow, get_claim
from .enumeration import enumerate_all_graphs
from .generators import GeneratorSpec, generate, sample_seed


@dataclass(frozen=True)
class Exhaustive:
    n: int

    def describe(self) -> dict:
        return {"exhaustive": self.n}


@dataclass(frozen=True)
class FileSource:
    path: str

    def describe(self) -> dict:
        return {"file": str(self.path)}


@dataclass(frozen=True)
class Sampled:
    spec: GeneratorSpec
    samples: int

    def describe(self) -> dict:
        d = self.spec.describe()
        d.pop("seed")
        return {"generator": d, "samples": self.samples}


Source = Union[Exhaustive, FileSource, Sampled]


@dataclass
class LemmaCounterexample:
    claim: str
    index: int
    graph: Graph
    bindings: dict

    def to_json(self) -> dict:
        out = {}
        for k, v in self.bindings.items():
            if isinstance(v, (set, frozenset)):
                out[k] = sorted(v)
            elif isinstance(v, tuple):
                out[k] = [list(x) if isinstance(x, tuple) else x for x in v]
            else:
                out[k] = v
        return {"claim": self.claim, "index": self.index,
                "graph6": emit_graph6(self.graph), "bindings": out}


@dataclass
class CorpusReport:
    claim: str
    source: dict
    seed: Optional[int]
    graphs_checked: int = 0
    skipped: int = 0
    overflows: list = field(default_factory=list)        # indices
    budget_failures: list = field(default_factory=list)  # (index, message)
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def overflow_rate(self) -> float:
        tried = self.graphs_checked + len(self.overflows)
        return len(self.overflows) / tried if tried else 0.0

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "source": self.source,
            "seed": self.seed,
            "graphs_checked": self.graphs_checked,
            "skipped_non_berge": self.skipped,
            "overflows": len(self.overflows),
            "overflow_indices": list(self.overflows),
            "budget_failures": [{"index": i, "reason": r} for i, r in self.budget_failures],
            "counterexamples": [c.to_json() for c in self.counterexamples],
            "counterexample_count": len(self.counterexamples),
            "passed": self.passed,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def iter_source(source: Source, seed: Optional[int]) -> Iterator[Graph]:
    if isinstance(source, Exhaustive):
        yield from enumerate_all_graphs(source.n)
    elif isinstance(source, FileSource):
        yield from read_graphs(Path(source.path))
    elif isinstance(source, Sampled):
        base = source.spec.seed if seed is None else seed
        for i in range(source.samples):
            yield generate(source.spec.with_seed(sample_seed(base, i)))
    else:
        raise TypeError(f"unknown source {source!r}")


def check_graph(claim_id: str, index: int, g: Graph, budget: int = BINDING_BUDGET):
    """Outcome tag for one graph: ("skipped" | "overflow" | "budget" | "ok" | "counterexample", payload)."""
    claim = get_claim(claim_id)
    if claim.berge_only and not is_berge(g):
        return "skipped", None
    try:
        found = claim.search(g, budget)
    except BindingOverflow as exc:
        return "overflow", str(exc)
    except BudgetExceeded as exc:
        return "budget", str(exc)
    if found is None:
        return "ok", None
    if claim.berge_only and not naive_berge(g):
        raise AssertionError(f"claim {claim_id}: graph {index} misclassified as Berge")
    if not claim.confirm(g, found):
        raise AssertionError(f"claim {claim_id}: unconfirmed counterexample {found} on graph {index}")
    return "counterexample", found


def _worker(args):
    claim_id, index, g, budget = args
    return check_graph(claim_id, index, g, budget)


def run_suite(claim_id: str, source: Source, seed: Optional[int] = None, jobs: int = 1,
              budget: int = BINDING_BUDGET) -> CorpusReport:
    """Check ``claim_id`` on every graph of ``source``.

    The result depends only on (claim, source, seed); ``jobs`` spreads graphs
    over worker processes but results are merged in corpus order.
    """
    get_claim(claim_id)
    started = time.perf_counter()
    report = CorpusReport(claim_id, source.describe(), seed)
    graphs = list(iter_source(source, seed))
    tasks = [(claim_id, i, g, budget) for i, g in enumerate(graphs)]
    if jobs > 1 and len(tasks) > 1:
        with Pool(jobs) as pool:
            outcomes = pool.map(_worker, tasks, chunksize=max(1, len(tasks) // (jobs * 8)))
    else:
        outcomes = [_worker(t) for t in tasks]
    for (_, i, g, _), (tag, payload) in zip(tasks, outcomes):
        if tag == "skipped":
            report.skipped += 1
        elif tag == "overflow":
            report.overflows.append(i)
        elif tag == "budget":
            report.budget_failures.append((i, payload))
        else:
            report.graphs_checked += 1
            if tag == "counterexample":
                report.counterexamples.append(LemmaCounterexample(claim_id, i, g, payload))
    report.wall_time = time.perf_counter() - started
    return report


def run_suites(claim_id: str, sources: list[Source], seed: Optional[int] = None,
               jobs: int = 1) -> CorpusReport:
    """One merged report over several sources, indices offset by source."""
    merged = CorpusReport(claim_id, {"sources": [s.describe() for s in sources]}, seed)
    offset = 0
    for src in sources:
        rep = run_suite(claim_id, src, seed, jobs)
        merged.graphs_checked += rep.graphs_checked
        merged.skipped += rep.skipped
        merged.overflows += [offset + i for i in rep.overflows]
        merged.budget_failures += [(offset + i, r) for i, r in rep.budget_failures]
        for c in rep.counterexamples:
            c.index += offset
            merged.counterexamples.append(c)
        merged.wall_time += rep.wall_time
        offset += rep.graphs_checked + rep.skipped + len(rep.overflows) + len(rep.budget_failures)
    return merged
