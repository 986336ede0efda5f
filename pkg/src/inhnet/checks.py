"""Structural properties every evaluated net should have.

Each check returns a list of human-readable findings; empty means the
property holds.  Violations are reported, never repaired.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import setsize, truthvalue
from .diagram import POS, Diagram, PotentialPath
from .engine import PathStore, Preclusion, Scepticism, Strategy, evaluate
from .policy import Policy


def initial_segment_closure(store: PathStore) -> list[str]:
    return [
        f"{p} is valid but its segment {s} is not"
        for p in store.sorted_paths()
        for s in p.initial_segments
        if s not in store
    ]


def direct_links_valid(store: PathStore) -> list[str]:
    return [
        f"direct link {a} is not valid"
        for a in store.diagram.sorted_arrows()
        if PotentialPath((a,)) not in store
    ]


def direct_link_wins(store: PathStore) -> list[str]:
    d = store.diagram
    out = []
    for p in store.sorted_paths():
        a = d.arrow(p.origin, p.endpoint)
        if not p.is_direct and a is not None and a.polarity is not p.polarity:
            out.append(f"{p} is valid against the direct link {a}")
    return out


def split_coherence(store: PathStore) -> list[str]:
    """Valid extensions of one valid prefix extend every parallel valid prefix."""
    out = []
    for p in store.sorted_paths():
        prefix = p.prefix
        if prefix is None:
            continue
        for other in store.paths(p.origin, prefix.endpoint, POS):
            extended = PotentialPath(other.arrows + p.arrows[-1:])
            if extended not in store:
                out.append(f"{p} is valid but {extended} is not")
    return out


def mutual_exclusion(store: PathStore) -> list[str]:
    out = []
    nodes = store.diagram.nodes
    for x in nodes:
        for y in nodes:
            pos = store.paths(x, y, POS)
            neg = [q for q in store.paths(x, y) if q.polarity is not POS]
            if pos and neg:
                out.append(f"{x} -> {y}: valid {pos[0]} and valid {neg[0]}")
    return out


STORE_CHECKS = {
    "initial_segments": initial_segment_closure,
    "direct_links": direct_links_valid,
    "direct_link_wins": direct_link_wins,
    "split_coherence": split_coherence,
    "mutual_exclusion": mutual_exclusion,
}


@dataclass
class CheckReport:
    findings: dict[str, list[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.findings.values())

    def failed(self) -> dict[str, list[str]]:
        return {k: v for k, v in self.findings.items() if v}


def run_checks(d: Diagram, policy: Policy = Policy.P22) -> CheckReport:
    store = evaluate(d, Strategy(Preclusion.SPLIT, Scepticism.DIRECT, policy))
    report = CheckReport({name: check(store) for name, check in STORE_CHECKS.items()})
    report.findings["truth_values"] = [str(r) for r in truthvalue.equivalence_report(d, policy)]
    report.findings["set_sizes"] = [str(r) for r in setsize.equivalence_report(d, policy)]
    return report
