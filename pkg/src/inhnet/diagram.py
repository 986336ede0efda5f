"""Diagrams, paths and degree.

A diagram is a finite DAG whose arrows are either positive (``a -> b``,
"a's are normally b's") or negative (``a !> b``, "a's are normally not
b's").  Paths are explicit arrow sequences; the validity machinery in
:mod:`inhnet.engine` is defined over them.
"""

from __future__ import annotations

import graphlib
import os
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import (
    CycleError,
    DuplicateArrowError,
    EndpointMismatchError,
    HardContradictionError,
    ResourceLimitError,
    SelfLoopError,
    UnknownNodeError,
)

DEFAULT_PATH_CAP = 100_000


def default_path_cap() -> int:
    """Path cap, overridable through ``INHNET_PATH_CAP``."""
    raw = os.environ.get("INHNET_PATH_CAP")
    return int(raw) if raw else DEFAULT_PATH_CAP


class Polarity(Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    def __lt__(self, other: Polarity) -> bool:
        return self.value < other.value

    def flip(self) -> Polarity:
        return Polarity.NEGATIVE if self is Polarity.POSITIVE else Polarity.POSITIVE

    @property
    def token(self) -> str:
        return "->" if self is Polarity.POSITIVE else "!>"

    @property
    def symbol(self) -> str:
        return "→" if self is Polarity.POSITIVE else "↛"


POS = Polarity.POSITIVE
NEG = Polarity.NEGATIVE


@dataclass(frozen=True, order=True)
class Arrow:
    source: str
    target: str
    polarity: Polarity = POS

    def __post_init__(self):
        if self.source == self.target:
            raise SelfLoopError(f"self-loop on {self.source!r}")

    def __str__(self) -> str:
        return f"{self.source} {self.polarity.token} {self.target}"

    @property
    def positive(self) -> bool:
        return self.polarity is POS


@dataclass(frozen=True, eq=False)
class GeneralizedPath:
    """A nonempty contiguous chain of arrows of either sign.

    Equality and hashing go by the arrow sequence, so a
    :class:`PotentialPath` equals the generalized path with the same arrows.
    """

    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if not self.arrows:
            raise ValueError("a path has at least one arrow")
        for first, second in zip(self.arrows, self.arrows[1:]):
            if first.target != second.source:
                raise EndpointMismatchError(f"{first} does not continue with {second}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneralizedPath):
            return NotImplemented
        return self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash(self.arrows)

    def __lt__(self, other: GeneralizedPath) -> bool:
        return self.sort_key < other.sort_key

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def sort_key(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        return self.nodes, tuple(a.polarity.value for a in self.arrows)

    @property
    def nodes(self) -> tuple[str, ...]:
        return (self.arrows[0].source,) + tuple(a.target for a in self.arrows)

    @property
    def origin(self) -> str:
        return self.arrows[0].source

    @property
    def endpoint(self) -> str:
        return self.arrows[-1].target

    @property
    def polarity(self) -> Polarity:
        return self.arrows[-1].polarity

    @property
    def is_direct(self) -> bool:
        return len(self.arrows) == 1

    @property
    def is_potential(self) -> bool:
        return all(a.positive for a in self.arrows[:-1])

    def format(self, unicode: bool = False) -> str:
        parts = [self.origin]
        for a in self.arrows:
            parts.append(a.polarity.symbol if unicode else a.polarity.token)
            parts.append(a.target)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.format()!r})"


class PotentialPath(GeneralizedPath):
    """A generalized path with at most one negative arrow, which is last."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_potential:
            raise ValueError(f"negative arrow inside {self.format()}")

    @property
    def prefix(self) -> PotentialPath | None:
        """The path without its final arrow (``None`` for a direct link)."""
        if len(self.arrows) == 1:
            return None
        return PotentialPath(self.arrows[:-1])

    @property
    def initial_segments(self) -> list[PotentialPath]:
        return [PotentialPath(self.arrows[:k]) for k in range(1, len(self.arrows))]

    @property
    def last_source(self) -> str:
        return self.arrows[-1].source


def path(*arrows: Arrow) -> PotentialPath:
    return PotentialPath(tuple(arrows))


def concatenate(first: GeneralizedPath, second: GeneralizedPath) -> GeneralizedPath:
    if first.endpoint != second.origin:
        raise EndpointMismatchError(
            f"{first.format()} ends at {first.endpoint}, {second.format()} starts at {second.origin}"
        )
    arrows = first.arrows + second.arrows
    if all(a.positive for a in arrows[:-1]):
        return PotentialPath(arrows)
    return GeneralizedPath(arrows)


@dataclass(frozen=True)
class Diagram:
    """An immutable, validated inheritance net.  Build with :func:`build_diagram`."""

    nodes: tuple[str, ...]
    arrows: frozenset[Arrow]
    labels: tuple[tuple[str, str], ...] = ()

    def __contains__(self, name: object) -> bool:
        return name in self._node_set

    @cached_property
    def _node_set(self) -> frozenset[str]:
        return frozenset(self.nodes)

    @cached_property
    def _by_pair(self) -> dict[tuple[str, str], Arrow]:
        return {(a.source, a.target): a for a in self.arrows}

    @cached_property
    def _out(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {n: [] for n in self.nodes}
        for a in sorted(self.arrows):
            out[a.source].append(a)
        return {n: tuple(v) for n, v in out.items()}

    @cached_property
    def _into(self) -> dict[str, tuple[Arrow, ...]]:
        into: dict[str, list[Arrow]] = {n: [] for n in self.nodes}
        for a in sorted(self.arrows):
            into[a.target].append(a)
        return {n: tuple(v) for n, v in into.items()}

    @property
    def label_map(self) -> Mapping[str, str]:
        return dict(self.labels)

    def check_node(self, name: str) -> None:
        if name not in self._node_set:
            raise UnknownNodeError(name)

    def arrow(self, source: str, target: str) -> Arrow | None:
        return self._by_pair.get((source, target))

    def out_arrows(self, name: str) -> tuple[Arrow, ...]:
        self.check_node(name)
        return self._out[name]

    def in_arrows(self, name: str) -> tuple[Arrow, ...]:
        self.check_node(name)
        return self._into[name]

    def sorted_arrows(self) -> list[Arrow]:
        return sorted(self.arrows)

    @cached_property
    def topological_order(self) -> tuple[str, ...]:
        sorter = graphlib.TopologicalSorter({n: [a.source for a in self._into[n]] for n in self.nodes})
        sorter.prepare()
        order: list[str] = []
        while sorter.is_active():
            ready = sorted(sorter.get_ready())
            order.extend(ready)
            sorter.done(*ready)
        return tuple(order)

    @cached_property
    def degrees(self) -> dict[tuple[str, str], int]:
        """Longest generalized-path length for every connected (origin, endpoint)."""
        position = {n: i for i, n in enumerate(self.topological_order)}
        table: dict[tuple[str, str], int] = {}
        for origin in self.nodes:
            longest = {origin: 0}
            for node in self.topological_order[position[origin]:]:
                if node not in longest:
                    continue
                for a in self._out[node]:
                    length = longest[node] + 1
                    if length > longest.get(a.target, 0):
                        longest[a.target] = length
            for node, length in longest.items():
                if node != origin:
                    table[origin, node] = length
        return table


def build_diagram(
    arrows: Iterable[Arrow],
    nodes: Iterable[str] = (),
    labels: Mapping[str, str] | None = None,
) -> Diagram:
    """Validate arrows (and optional isolated nodes) into a :class:`Diagram`."""
    seen: dict[tuple[str, str], Arrow] = {}
    for a in arrows:
        if a.source == a.target:
            raise SelfLoopError(f"self-loop on {a.source!r}")
        prior = seen.get((a.source, a.target))
        if prior is not None:
            if prior.polarity is a.polarity:
                raise DuplicateArrowError(f"duplicate arrow {a}")
            raise HardContradictionError(a.source, a.target)
        seen[a.source, a.target] = a
    names = set(nodes)
    for source, target in seen:
        names.update((source, target))
    for name in names:
        if not name:
            raise ValueError("node names must be nonempty")
    graph: dict[str, list[str]] = {n: [] for n in names}
    for source, target in seen:
        graph[target].append(source)
    try:
        tuple(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError as exc:
        # graphlib lists the cycle in arrow direction, first node repeated last
        raise CycleError(list(exc.args[1])) from None
    label_pairs = tuple(sorted((labels or {}).items()))
    for name, _ in label_pairs:
        if name not in names:
            raise UnknownNodeError(name)
    return Diagram(tuple(sorted(names)), frozenset(seen.values()), label_pairs)


def degree(d: Diagram, origin: str, endpoint: str) -> int | None:
    d.check_node(origin)
    d.check_node(endpoint)
    return d.degrees.get((origin, endpoint))


def _walk(d: Diagram, origin: str, positive_only: bool) -> Iterator[tuple[Arrow, ...]]:
    stack: list[tuple[Arrow, ...]] = [(a,) for a in reversed(d.out_arrows(origin))]
    while stack:
        arrows = stack.pop()
        yield arrows
        last = arrows[-1]
        if positive_only and not last.positive:
            continue
        for a in reversed(d.out_arrows(last.target)):
            stack.append(arrows + (a,))


def _capped(paths: Iterator, cap: int | None) -> list:
    limit = default_path_cap() if cap is None else cap
    out = []
    for p in paths:
        out.append(p)
        if len(out) > limit:
            raise ResourceLimitError(f"more than {limit} paths")
    return out


def generalized_paths(
    d: Diagram, origin: str, endpoint: str, cap: int | None = None
) -> list[GeneralizedPath]:
    d.check_node(origin)
    d.check_node(endpoint)
    found = (
        GeneralizedPath(arrows)
        for arrows in _walk(d, origin, positive_only=False)
        if arrows[-1].target == endpoint
    )
    return sorted(_capped(found, cap))


def potential_paths(d: Diagram, origin: str, cap: int | None = None) -> list[PotentialPath]:
    d.check_node(origin)
    found = (PotentialPath(arrows) for arrows in _walk(d, origin, positive_only=True))
    return sorted(_capped(found, cap))


@lru_cache(maxsize=128)
def potential_path_index(d: Diagram, cap: int | None = None) -> dict[tuple[str, str], tuple[PotentialPath, ...]]:
    """Every potential path of ``d`` grouped by (origin, endpoint).

    The cap applies to the diagram as a whole.
    """
    limit = default_path_cap() if cap is None else cap
    index: dict[tuple[str, str], list[PotentialPath]] = {}
    total = 0
    for origin in d.nodes:
        for p in potential_paths(d, origin, cap=limit):
            index.setdefault((origin, p.endpoint), []).append(p)
            total += 1
            if total > limit:
                raise ResourceLimitError(f"more than {limit} potential paths in diagram")
    return {k: tuple(v) for k, v in index.items()}
