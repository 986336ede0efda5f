"""Valid paths by induction on degree.

Pairs ``(x, y)`` are processed in nondecreasing ``degree(x, y)``; all
potential paths from ``x`` to ``y`` share that degree, and everything a
decision for them consults (valid paths ``x ... v`` and ``v ... u`` with
``u -> y`` or ``u !> y``) has strictly smaller degree.  A decision only
looks at (origin, endpoint of a valid positive path, final arrow) triples,
never at whole paths, except under total-validity and on-path preclusion.

For a pair, the *sources* are ``x`` itself when it has a direct arrow to
``y`` plus every node validly reachable from ``x`` that has a direct arrow
to ``y``.  Source ``z`` is stronger than source ``s`` when ``z`` is ``x``
or, under split validity, when ``s`` is validly reachable from ``z``.
The sources are then handed to :func:`inhnet.policy.resolve`; a compound
path is valid when its initial segment is valid and the source at its
last arrow survives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .diagram import NEG, POS, Diagram, Polarity, PotentialPath, potential_path_index
from .errors import (
    ConfigurationError,
    InheritanceError,
    MixedDiagramError,
    PathNotInDiagramError,
    ResourceLimitError,
)
from .policy import Claim, Outcome, Policy, resolve

DEFAULT_EXTENSION_CAP = 4096


class Preclusion(Enum):
    SPLIT = "split"
    ON_PATH = "onpath"
    TOTAL = "total"


class Scepticism(Enum):
    DIRECT = "direct"
    EXTENSIONS = "extensions"


@dataclass(frozen=True)
class Strategy:
    preclusion: Preclusion = Preclusion.SPLIT
    scepticism: Scepticism = Scepticism.DIRECT
    policy: Policy = Policy.P22

    def __post_init__(self):
        if self.scepticism is Scepticism.EXTENSIONS and self.preclusion is not Preclusion.SPLIT:
            raise ConfigurationError("extensions are only defined with split preclusion")

    def as_dict(self) -> dict[str, str]:
        return {
            "preclusion": self.preclusion.value,
            "scepticism": self.scepticism.value,
            "policy": self.policy.value,
        }


DEFAULT_STRATEGY = Strategy()


@dataclass(frozen=True)
class PathStore:
    diagram: Diagram
    strategy: Strategy
    valid: frozenset[PotentialPath]

    def __contains__(self, p: object) -> bool:
        return p in self.valid

    def __len__(self) -> int:
        return len(self.valid)

    @cached_property
    def index(self) -> dict[tuple[str, str, Polarity], tuple[PotentialPath, ...]]:
        grouped: dict[tuple[str, str, Polarity], list[PotentialPath]] = {}
        for p in sorted(self.valid):
            grouped.setdefault((p.origin, p.endpoint, p.polarity), []).append(p)
        return {k: tuple(v) for k, v in grouped.items()}

    def paths(self, origin: str, endpoint: str, polarity: Polarity | None = None) -> list[PotentialPath]:
        if polarity is None:
            return sorted(self.index.get((origin, endpoint, POS), ()) + self.index.get((origin, endpoint, NEG), ()))
        return list(self.index.get((origin, endpoint, polarity), ()))

    def sorted_paths(self) -> list[PotentialPath]:
        return sorted(self.valid)

    def reaches(self, origin: str, endpoint: str) -> bool:
        """Is there a valid positive path from ``origin`` to ``endpoint``?"""
        return (origin, endpoint, POS) in self.index


class Verdict(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NO_PATH = "no-path"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Conclusion:
    value: Verdict
    witnesses: tuple[PotentialPath, ...] = ()
    sources: frozenset[str] = field(default_factory=frozenset)


class _Run:
    """Mutable state of one pass of the degree induction."""

    def __init__(self, d: Diagram, strategy: Strategy, path_cap: int | None):
        self.d = d
        self.strategy = strategy
        self.index = potential_path_index(d, path_cap)
        self.pairs = sorted(d.degrees, key=lambda k: (d.degrees[k], k))
        self.step = 0
        self.valid: set[PotentialPath] = set()
        self.reach: dict[str, set[str]] = {n: set() for n in d.nodes}
        self.positive: dict[tuple[str, str], list[PotentialPath]] = {}

    def copy(self) -> _Run:
        other = object.__new__(_Run)
        other.d, other.strategy, other.index, other.pairs = self.d, self.strategy, self.index, self.pairs
        other.step = self.step
        other.valid = set(self.valid)
        other.reach = {n: set(r) for n, r in self.reach.items()}
        other.positive = {k: list(v) for k, v in self.positive.items()}
        return other

    def accept(self, paths: Iterable[PotentialPath]) -> None:
        for p in paths:
            self.valid.add(p)
            if p.polarity is POS:
                self.reach[p.origin].add(p.endpoint)
                self.positive.setdefault((p.origin, p.endpoint), []).append(p)

    def store(self) -> PathStore:
        return PathStore(self.d, self.strategy, frozenset(self.valid))

    def stronger(self, x: str, z: str, s: str, preclusion: Preclusion) -> bool:
        """Is source ``z`` stronger than source ``s``, seen from ``x``?"""
        if z == x:
            return True
        if preclusion is Preclusion.TOTAL:
            return any(z in p.nodes for p in self.positive.get((x, s), ()))
        return s in self.reach[z]

    def outcome(self, x: str, y: str, preclusion: Preclusion) -> Outcome | None:
        said: dict[str, Polarity] = {}
        direct = self.d.arrow(x, y)
        if direct is not None:
            said[x] = direct.polarity
        for u in sorted(self.reach[x]):
            a = self.d.arrow(u, y)
            if a is not None:
                said[u] = a.polarity
        if not said:
            return None
        stronger = [
            (z, s) for z in said for s in said if z != s and self.stronger(x, z, s, preclusion)
        ]
        return resolve((Claim(s, p) for s, p in said.items()), stronger, self.strategy.policy)

    def advance(self) -> tuple[list[PotentialPath], list[PotentialPath]] | None:
        """Decide pairs until done (``None``) or an unresolved conflict.

        A conflict only arises with extension-based scepticism; the return
        value then holds the positive and the negative candidates to branch on.
        """
        while self.step < len(self.pairs):
            x, y = self.pairs[self.step]
            self.step += 1
            fork = self._decide(x, y)
            if fork is not None:
                return fork
        return None

    def _decide(self, x: str, y: str):
        candidates = self.index.get((x, y), ())
        self.accept(p for p in candidates if p.is_direct)
        compound = [p for p in candidates if not p.is_direct and p.prefix in self.valid]
        if not compound:
            return None
        preclusion = self.strategy.preclusion
        if preclusion is Preclusion.ON_PATH:
            # on-path only changes the check on the path itself; rivals are
            # still judged by split validity
            outcome = self.outcome(x, y, Preclusion.SPLIT)
            self.accept(
                p for p in compound
                if outcome.verdict is p.polarity and not self._hit_on_path(p)
            )
            return None
        outcome = self.outcome(x, y, preclusion)
        if outcome.accepted or self.strategy.scepticism is Scepticism.DIRECT:
            self.accept(p for p in compound if p.last_source in outcome.survivors)
            return None
        remaining = [p for p in compound if p.last_source in outcome.remaining]
        return (
            [p for p in remaining if p.polarity is POS],
            [p for p in remaining if p.polarity is NEG],
        )

    def _hit_on_path(self, p: PotentialPath) -> bool:
        y = p.endpoint
        for v in p.nodes[:-1]:
            a = self.d.arrow(v, y)
            if a is not None and a.polarity is not p.polarity:
                return True
        return False


@lru_cache(maxsize=512)
def evaluate(d: Diagram, strategy: Strategy = DEFAULT_STRATEGY, path_cap: int | None = None) -> PathStore:
    """All valid paths of ``d`` under a directly sceptical strategy."""
    if strategy.scepticism is not Scepticism.DIRECT:
        raise ConfigurationError("evaluate needs direct scepticism; use extensions()")
    run = _Run(d, strategy, path_cap)
    run.advance()
    return run.store()


def extensions(
    d: Diagram,
    policy: Policy = Policy.P22,
    cap: int = DEFAULT_EXTENSION_CAP,
    path_cap: int | None = None,
) -> list[PathStore]:
    """Branch on every unresolved conflict; positive branch first.

    Runs breadth-first: each round advances every open branch to its next
    conflict and splits it in two.
    """
    strategy = Strategy(Preclusion.SPLIT, Scepticism.EXTENSIONS, policy)
    frontier: list[tuple[tuple[int, ...], _Run]] = [((), _Run(d, strategy, path_cap))]
    leaves: list[tuple[tuple[int, ...], _Run]] = []
    while frontier:
        opened: list[tuple[tuple[int, ...], _Run]] = []
        for choices, run in frontier:
            fork = run.advance()
            if fork is None:
                leaves.append((choices, run))
                continue
            positive, negative = fork
            other = run.copy()
            run.accept(positive)
            other.accept(negative)
            opened += [(choices + (0,), run), (choices + (1,), other)]
            if len(leaves) + len(opened) > cap:
                raise ResourceLimitError(f"more than {cap} extensions")
        frontier = opened
    leaves.sort(key=lambda item: item[0])
    return [run.store() for _, run in leaves]


class Closure(Enum):
    PATHS = "paths"
    CONCLUSIONS = "conclusions"


ConclusionTable = dict[tuple[str, str], Conclusion]


def conclusion_from(store: PathStore, x: str, y: str, path_cap: int | None = None) -> Conclusion:
    d = store.diagram
    d.check_node(x)
    d.check_node(y)
    pos = store.paths(x, y, POS)
    neg = store.paths(x, y, NEG)
    if pos and neg:
        raise InheritanceError(f"both {x} {y} and {x} not-{y} are valid")
    if pos:
        return Conclusion(Verdict.POSITIVE, tuple(pos), frozenset(p.last_source for p in pos))
    if neg:
        return Conclusion(Verdict.NEGATIVE, tuple(neg), frozenset(p.last_source for p in neg))
    if potential_path_index(d, path_cap).get((x, y)):
        return Conclusion(Verdict.UNDECIDED)
    return Conclusion(Verdict.NO_PATH)


def conclusion_table(store: PathStore) -> ConclusionTable:
    nodes = store.diagram.nodes
    return {(x, y): conclusion_from(store, x, y) for x in nodes for y in nodes if x != y}


def sceptical_closure(exts: Sequence[PathStore], mode: Closure = Closure.PATHS) -> PathStore | ConclusionTable:
    if not exts:
        raise ValueError("no extensions to intersect")
    d = exts[0].diagram
    if any(e.diagram != d for e in exts):
        raise MixedDiagramError("extensions over different diagrams")
    if mode is Closure.PATHS:
        common = frozenset.intersection(*(e.valid for e in exts))
        return PathStore(d, exts[0].strategy, common)
    tables = [conclusion_table(e) for e in exts]
    merged: ConclusionTable = {}
    for key in tables[0]:
        found = [t[key] for t in tables]
        values = {c.value for c in found}
        if len(values) == 1:
            witnesses = tuple(sorted({w for c in found for w in c.witnesses}))
            sources = frozenset().union(*(c.sources for c in found))
            merged[key] = Conclusion(found[0].value, witnesses, sources)
        else:
            merged[key] = Conclusion(Verdict.UNDECIDED)
    return merged


def is_valid(d: Diagram, p: PotentialPath, strategy: Strategy = DEFAULT_STRATEGY) -> bool:
    if not isinstance(p, PotentialPath) or any(a not in d.arrows for a in p.arrows):
        raise PathNotInDiagramError(f"{p} is not a potential path of the diagram")
    if strategy.scepticism is Scepticism.EXTENSIONS:
        return p in sceptical_closure(extensions(d, strategy.policy), Closure.PATHS)
    return p in evaluate(d, strategy)


def concludes(d: Diagram, x: str, y: str, strategy: Strategy = DEFAULT_STRATEGY) -> Conclusion:
    d.check_node(x)
    d.check_node(y)
    if strategy.scepticism is Scepticism.EXTENSIONS:
        table = sceptical_closure(extensions(d, strategy.policy), Closure.CONCLUSIONS)
        if x == y:
            return Conclusion(Verdict.NO_PATH)
        return table[x, y]
    return conclusion_from(evaluate(d, strategy), x, y)
