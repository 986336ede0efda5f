"""Resolving polarized claims from sources of unequal strength.

Sources speak about one fixed question, each saying yes or no.  A strength
relation, given as ``(stronger, weaker)`` pairs, compares some of them.  It
is deliberately used as given: no transitive closure is taken.

Two elimination policies are offered:

``P21``
    drop every source that has some strictly stronger source.
``P22``
    drop a source only when a strictly stronger source contradicts it.

Whatever remains decides the question if it agrees, and nothing is
concluded otherwise.  Removal is a single pass against the original claim
set: a source knocked out by a third party can still knock out others.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .diagram import Polarity
from .errors import DuplicateSourceError, EmptyClaimsError


class Policy(Enum):
    P21 = "p21"
    P22 = "p22"


@dataclass(frozen=True, order=True)
class Claim:
    source: str
    polarity: Polarity


@dataclass(frozen=True)
class Outcome:
    """Result of :func:`resolve`.

    ``verdict`` is the accepted polarity, or ``None`` when undecided.
    ``survivors`` are the sources accepted for the claim (empty when
    undecided); ``remaining`` are the sources left after elimination,
    whether or not they agreed.
    """

    verdict: Polarity | None
    survivors: frozenset[str]
    remaining: frozenset[str]

    @property
    def accepted(self) -> bool:
        return self.verdict is not None


def resolve(
    claims: Iterable[Claim],
    stronger: Iterable[tuple[str, str]],
    policy: Policy = Policy.P22,
) -> Outcome:
    claims = list(claims)
    if not claims:
        raise EmptyClaimsError("nothing to resolve")
    said: dict[str, Polarity] = {}
    for c in claims:
        if c.source in said:
            raise DuplicateSourceError(f"two claims from {c.source!r}")
        said[c.source] = c.polarity

    beaten_by: dict[str, set[str]] = {}
    for strong, weak in stronger:
        if strong == weak:
            raise ValueError(f"strength relation is reflexive at {strong!r}")
        if strong in said and weak in said:
            beaten_by.setdefault(weak, set()).add(strong)

    def eliminated(source: str) -> bool:
        rivals = beaten_by.get(source, ())
        if policy is Policy.P21:
            return bool(rivals)
        return any(said[r] is not said[source] for r in rivals)

    remaining = frozenset(s for s in said if not eliminated(s))
    verdicts = {said[s] for s in remaining}
    if len(verdicts) == 1:
        return Outcome(verdicts.pop(), remaining, remaining)
    return Outcome(None, frozenset(), remaining)
