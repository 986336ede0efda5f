from __future__ import annotations

from inhnet.diagram import NEG, POS, Arrow, PotentialPath


def pp(text: str) -> PotentialPath:
    """``"a -> c !> d"`` as a path."""
    tokens = text.split()
    arrows = []
    for i in range(0, len(tokens) - 2, 2):
        sign = {"->": POS, "!>": NEG}[tokens[i + 1]]
        arrows.append(Arrow(tokens[i], tokens[i + 2], sign))
    return PotentialPath(tuple(arrows))


def texts(paths) -> list[str]:
    return [str(p) for p in paths]
