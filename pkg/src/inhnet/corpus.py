"""The bundled example nets."""

from __future__ import annotations

from importlib import resources

from .diagram import Diagram
from .netio import parse

NAMES = (
    "tweety",
    "nixon",
    "preclusion",
    "downward",
    "split_total",
    "tweety_ext",
    "sets_refclass",
    "sets_chain",
    "concat",
)


def source(name: str) -> str:
    if name not in NAMES:
        raise KeyError(name)
    return resources.files("inhnet").joinpath("nets", f"{name}.inh").read_text(encoding="utf-8")


def load(name: str) -> Diagram:
    return parse(source(name))


def load_all() -> dict[str, Diagram]:
    return {name: load(name) for name in NAMES}
