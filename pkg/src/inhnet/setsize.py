"""Nets read as statements about relative subset size.

``X -> Y`` says that X ∩ Y is a *Y-BIG* subset of X (direct information);
``X !> Y`` that X ∩ ∁Y is one.  Inherited information is only *big*.  For a
pair (X, Z) without a direct arrow, information reaches X through its
reference class: every Y that X sees (X ∩ Y is a Y-big subset of X) and
that carries direct Z-information.  Derivation proceeds in five steps:

* channel: X sees each Y_i, so X ∩ ⋂Y_i is a ⋂Y_i-big subset of X;
* preclusion: the Y_i's direct claims about Z are resolved, with Y_j
  stronger than Y_i when Y_j sees Y_i, giving a Z-BIG (or, undecided,
  a Z-MEDIUM) subset of ⋂Y_i;
* transfer: only for that most specific class, to X ∩ ⋂Y_i;
* projection: down to X;
* weakening: every BIG fact is also big.

Terms are symbolic and never simplified, so distinct terms stay distinct.
Accessibility and specificity come from the big facts derived so far, which
are complete for every pair of smaller degree; nothing is borrowed from the
path engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .diagram import NEG, POS, Diagram, Polarity, potential_path_index
from .engine import Conclusion, Preclusion, Scepticism, Strategy, Verdict, concludes
from .policy import Claim, Outcome, Policy, resolve
from .truthvalue import Discrepancy, paths_label


@dataclass(frozen=True)
class SetTerm:
    """An intersection of node sets and complements of node sets."""

    positives: frozenset[str]
    complemented: frozenset[str] = frozenset()

    def __post_init__(self):
        if not self.positives:
            raise ValueError("a set term needs at least one positive node")
        if self.positives & self.complemented:
            raise ValueError("a node cannot be both intersected and complemented")

    @classmethod
    def of(cls, *names: str, without: tuple[str, ...] = ()) -> SetTerm:
        return cls(frozenset(names), frozenset(without))

    def meet(self, name: str, polarity: Polarity = POS) -> SetTerm:
        if polarity is POS:
            return SetTerm(self.positives | {name}, self.complemented)
        return SetTerm(self.positives, self.complemented | {name})

    def __or__(self, other: SetTerm) -> SetTerm:
        return SetTerm(self.positives | other.positives, self.complemented | other.complemented)

    def within(self, base: SetTerm) -> bool:
        return self.positives >= base.positives and self.complemented >= base.complemented

    def serialize(self) -> list[str]:
        return sorted(self.positives) + ["~" + n for n in sorted(self.complemented)]

    def __str__(self) -> str:
        return "∩".join(sorted(self.positives) + ["∁" + n for n in sorted(self.complemented)])


class Grade(Enum):
    BIG = "BIG"
    big = "big"
    MEDIUM = "MEDIUM"


@dataclass(frozen=True)
class SizeFact:
    """``subset`` is a ``dimension``-``grade`` subset of ``base``."""

    subset: SetTerm
    base: SetTerm
    dimension: SetTerm
    grade: Grade
    rule: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.subset.within(self.base):
            raise ValueError(f"{self.subset} is not syntactically inside {self.base}")

    def __str__(self) -> str:
        return f"{self.subset} ∈ {self.grade.value}({self.base}, {self.dimension})"

    def as_record(self) -> dict:
        return {
            "subset": self.subset.serialize(),
            "base": self.base.serialize(),
            "dimension": self.dimension.serialize(),
            "grade": self.grade.value,
            "rule": self.rule,
        }


def big(subset: SetTerm, base: SetTerm, dimension: SetTerm, rule: str) -> SizeFact:
    return SizeFact(subset, base, dimension, Grade.big, rule)


@dataclass(frozen=True)
class Resolution:
    """How the reference class of one (X, Z) pair settled."""

    members: tuple[str, ...]
    outcome: Outcome

    @property
    def term(self) -> SetTerm:
        return SetTerm(frozenset(self.members))


@dataclass(frozen=True)
class SizeModel:
    facts: frozenset[SizeFact]
    resolutions: dict[tuple[str, str], Resolution]

    def has(self, fact: SizeFact) -> bool:
        return fact in self.facts

    def conclusion(self, x: str, z: str) -> Polarity | None | str:
        pos = _inherited(x, z, POS) in self.facts
        neg = _inherited(x, z, NEG) in self.facts
        if pos and neg:
            return "both"
        if pos:
            return POS
        if neg:
            return NEG
        return None


def _inherited(x: str, z: str, polarity: Polarity) -> SizeFact:
    return big(SetTerm.of(x).meet(z, polarity), SetTerm.of(x), SetTerm.of(z), "")


@lru_cache(maxsize=256)
def saturate(d: Diagram, policy: Policy = Policy.P22) -> SizeModel:
    facts: set[SizeFact] = set()
    resolutions: dict[tuple[str, str], Resolution] = {}

    def add(fact: SizeFact) -> None:
        facts.add(fact)
        if fact.grade is Grade.BIG:
            facts.add(SizeFact(fact.subset, fact.base, fact.dimension, Grade.big, "weakening"))

    def sees(x: str, y: str) -> bool:
        return _inherited(x, y, POS) in facts

    for x, z in sorted(d.degrees, key=lambda k: (d.degrees[k], k)):
        X, Z = SetTerm.of(x), SetTerm.of(z)
        direct = d.arrow(x, z)
        if direct is not None:
            add(SizeFact(X.meet(z, direct.polarity), X, Z, Grade.BIG, "base"))
            continue
        members = tuple(y for y in d.nodes if y != x and d.arrow(y, z) is not None and sees(x, y))
        if not members:
            continue

        channel = SetTerm.of(members[0])
        for y in members[1:]:
            step = channel.meet(y)
            add(big(X | step, X, step, "channel"))
            channel = step
        ref = channel

        claims = [Claim(y, d.arrow(y, z).polarity) for y in members]
        stronger = [(a, b) for a in members for b in members if a != b and sees(a, b)]
        outcome = resolve(claims, stronger, policy)
        resolutions[x, z] = Resolution(members, outcome)
        if not outcome.accepted:
            facts.add(SizeFact(ref.meet(z), ref, Z, Grade.MEDIUM, "undecided"))
            continue
        if len(members) > 1:
            add(SizeFact(ref.meet(z, outcome.verdict), ref, Z, Grade.BIG, "preclusion"))
        lifted = X | ref
        add(big(lifted.meet(z, outcome.verdict), lifted, Z, "transfer"))
        add(big(X.meet(z, outcome.verdict), X, Z, "projection"))
    return SizeModel(frozenset(facts), resolutions)


def derive_size_facts(d: Diagram, policy: Policy = Policy.P22) -> frozenset[SizeFact]:
    return saturate(d, policy).facts


def concludes_set(d: Diagram, x: str, z: str, policy: Policy = Policy.P22) -> Conclusion:
    """Conclusion from size facts; ``sources`` are the reference-class survivors."""
    d.check_node(x)
    d.check_node(z)
    model = saturate(d, policy)
    found = model.conclusion(x, z)
    if found == "both":
        raise ValueError(f"both {x}∩{z} and {x}∩∁{z} derived as {z}-big")
    resolution = model.resolutions.get((x, z))
    survivors = resolution.outcome.survivors if resolution else frozenset({x})
    if found is POS:
        return Conclusion(Verdict.POSITIVE, (), survivors)
    if found is NEG:
        return Conclusion(Verdict.NEGATIVE, (), survivors)
    if x != z and potential_path_index(d).get((x, z)):
        return Conclusion(Verdict.UNDECIDED)
    return Conclusion(Verdict.NO_PATH)


def equivalence_report(d: Diagram, policy: Policy = Policy.P22) -> list[Discrepancy]:
    """Pairs on which size facts and valid-path conclusions disagree."""
    strategy = Strategy(Preclusion.SPLIT, Scepticism.DIRECT, policy)
    model = saturate(d, policy)
    rows = []
    for x in d.nodes:
        for z in d.nodes:
            if x == z:
                continue
            found = model.conclusion(x, z)
            mine = {POS: "positive", NEG: "negative", None: "none"}.get(found, "both")
            theirs = paths_label(concludes(d, x, z, strategy).value)
            if mine != theirs:
                rows.append(Discrepancy(x, z, theirs, mine))
    return rows
