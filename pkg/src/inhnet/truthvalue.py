"""Nets read as information sources with strengths.

Facts are ``a =>_x b`` ("with strength x, a's are b's") and the decided
``a => b``.  Arrows give ``a =>_a b`` and direct facts are decided at once;
a decided ``a => b`` together with ``b =>_b c`` yields the candidate
``a =>_b c``; candidates are decided by :func:`inhnet.policy.resolve`, with
``x`` stronger than ``y`` whenever ``x => y`` is decided.

Only a direct fact ``b =>_b c`` can be chained onto ``a => b``.  Chaining
two decided composite facts is exactly what must not happen, so there is
no rule for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import NEG, POS, Diagram, Polarity
from .engine import Preclusion, Scepticism, Strategy, Verdict, concludes
from .policy import Claim, Policy, resolve


@dataclass(frozen=True)
class TruthValueFact:
    """``strength`` is the source node, or ``None`` for a decided fact."""

    subject: str
    object: str
    sign: Polarity
    strength: str | None

    @property
    def decided(self) -> bool:
        return self.strength is None

    def __str__(self) -> str:
        neg = "" if self.sign is POS else "¬"
        arrow = "⇒" if self.decided else f"⇒_{self.strength}"
        return f"{self.subject} {arrow} {neg}{self.object}"

    def as_record(self) -> dict:
        return {
            "subject": self.subject,
            "object": self.object,
            "sign": self.sign.value,
            "strength": self.strength,
        }

    def __lt__(self, other: TruthValueFact) -> bool:
        return self._key() < other._key()

    def _key(self):
        return (self.subject, self.object, self.sign.value, self.strength or "")


@lru_cache(maxsize=256)
def derive(d: Diagram, policy: Policy = Policy.P22) -> frozenset[TruthValueFact]:
    facts: set[TruthValueFact] = set()
    decided: dict[tuple[str, str], Polarity] = {}

    for a, c in sorted(d.degrees, key=lambda k: (d.degrees[k], k)):
        arrow = d.arrow(a, c)
        if arrow is not None:
            facts.add(TruthValueFact(a, c, arrow.polarity, a))
            facts.add(TruthValueFact(a, c, arrow.polarity, None))
            decided[a, c] = arrow.polarity
        # chaining: a => b, b =>_b c  gives  a =>_b c
        said: dict[str, Polarity] = {}
        for b in d.nodes:
            if decided.get((a, b)) is not POS:
                continue
            info = d.arrow(b, c)
            if info is not None:
                said[b] = info.polarity
                facts.add(TruthValueFact(a, c, info.polarity, b))
        if arrow is not None or not said:
            continue
        stronger = [(x, y) for x in said for y in said if x != y and decided.get((x, y)) is POS]
        outcome = resolve((Claim(s, p) for s, p in said.items()), stronger, policy)
        if outcome.accepted:
            facts.add(TruthValueFact(a, c, outcome.verdict, None))
            decided[a, c] = outcome.verdict
    return frozenset(facts)


def decided_facts(d: Diagram, policy: Policy = Policy.P22) -> dict[tuple[str, str], set[Polarity]]:
    out: dict[tuple[str, str], set[Polarity]] = {}
    for f in derive(d, policy):
        if f.decided:
            out.setdefault((f.subject, f.object), set()).add(f.sign)
    return out


@dataclass(frozen=True, order=True)
class Discrepancy:
    origin: str
    target: str
    paths: str
    other: str

    def as_record(self) -> dict:
        return {"from": self.origin, "to": self.target, "paths": self.paths, "other": self.other}


def _label(signs: set[Polarity]) -> str:
    if signs == {POS}:
        return Verdict.POSITIVE.value
    if signs == {NEG}:
        return Verdict.NEGATIVE.value
    if signs:
        return "both"
    return "none"


def paths_label(verdict: Verdict) -> str:
    if verdict in (Verdict.POSITIVE, Verdict.NEGATIVE):
        return verdict.value
    return "none"


def equivalence_report(d: Diagram, policy: Policy = Policy.P22) -> list[Discrepancy]:
    """Pairs on which decided facts and valid-path conclusions disagree."""
    strategy = Strategy(Preclusion.SPLIT, Scepticism.DIRECT, policy)
    decided = decided_facts(d, policy)
    rows = []
    for x in d.nodes:
        for y in d.nodes:
            if x == y:
                continue
            mine = _label(decided.get((x, y), set()))
            theirs = paths_label(concludes(d, x, y, strategy).value)
            if mine != theirs:
                rows.append(Discrepancy(x, y, theirs, mine))
    return rows
