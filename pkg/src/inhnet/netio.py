"""Reading and writing nets.

The ``.inh`` format is line oriented::

    # penguins
    node a "Tweety"
    a -> c
    c !> d

``->`` is a positive arrow, ``!>`` a negative one, ``#`` starts a comment.
"""

from __future__ import annotations

import json
import re
from typing import Any, Iterable, Mapping, Sequence

from .diagram import Arrow, Diagram, NEG, POS, PotentialPath, build_diagram
from .errors import (
    CycleError,
    DiagramError,
    DuplicateNodeError,
    HardContradictionError,
    MixedDiagramError,
    NetSyntaxError,
)

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_STRING = re.compile(r'"((?:[^"\\]|\\.)*)"')
_ARROWS = {"->": POS, "!>": NEG}


class _Line:
    def __init__(self, text: str, number: int):
        self.text = text
        self.number = number
        self.pos = 0

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r":
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_space()
        return self.pos >= len(self.text) or self.text[self.pos] == "#"

    def fail(self, expected: str):
        found = self.text[self.pos:].split()[0] if not self.at_end() else ""
        raise NetSyntaxError(self.number, self.pos + 1, expected, found)

    def ident(self) -> str:
        self.skip_space()
        m = _IDENT.match(self.text, self.pos)
        if not m:
            self.fail("identifier")
        self.pos = m.end()
        return m.group()

    def peek_ident(self) -> str | None:
        self.skip_space()
        m = _IDENT.match(self.text, self.pos)
        return m.group() if m else None

    def arrow(self):
        self.skip_space()
        token = self.text[self.pos:self.pos + 2]
        if token not in _ARROWS:
            self.fail("'->' or '!>'")
        self.pos += 2
        return _ARROWS[token]

    def string(self) -> str:
        self.skip_space()
        m = _STRING.match(self.text, self.pos)
        if not m:
            self.fail("quoted label")
        self.pos = m.end()
        return re.sub(r"\\(.)", r"\1", m.group(1))

    def end(self) -> None:
        if not self.at_end():
            self.fail("end of line")


def parse(text: str) -> Diagram:
    """Parse ``.inh`` source; diagram errors carry the line they come from."""
    arrows: list[Arrow] = []
    arrow_lines: dict[tuple[str, str], int] = {}
    nodes: dict[str, int] = {}
    labels: dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _Line(raw, number)
        if line.at_end():
            continue
        first = line.ident()
        if first == "node" and line.peek_ident() is not None:
            name = line.ident()
            label = None
            if not line.at_end():
                label = line.string()
            line.end()
            if name in nodes:
                raise DuplicateNodeError(f"node {name!r} declared twice", number)
            nodes[name] = number
            if label is not None:
                labels[name] = label
            continue
        polarity = line.arrow()
        target = line.ident()
        line.end()
        if first == target:
            raise DiagramError(f"self-loop on {first!r}", number)
        prior = arrow_lines.get((first, target))
        if prior is not None:
            previous = next(a for a in arrows if (a.source, a.target) == (first, target))
            if previous.polarity is polarity:
                raise DiagramError(f"duplicate arrow {first} {polarity.token} {target}", number)
            raise HardContradictionError(first, target, number)
        arrow_lines[first, target] = number
        arrows.append(Arrow(first, target, polarity))
    try:
        return build_diagram(arrows, nodes, labels)
    except CycleError as exc:
        lines = [arrow_lines[p] for p in zip(exc.cycle, exc.cycle[1:]) if p in arrow_lines]
        raise CycleError(exc.cycle, max(lines) if lines else None) from None


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_net(d: Diagram) -> str:
    """Canonical ``.inh`` text; ``parse(emit_net(d)) == d``."""
    lines = []
    connected = {a.source for a in d.arrows} | {a.target for a in d.arrows}
    labels = d.label_map
    for name in d.nodes:
        if name in labels:
            lines.append(f"node {name} {_quote(labels[name])}")
        elif name not in connected:
            lines.append(f"node {name}")
    lines.extend(str(a) for a in d.sorted_arrows())
    return "\n".join(lines) + ("\n" if lines else "")


def format_path(p: PotentialPath, unicode: bool = False) -> str:
    return p.format(unicode=unicode)


def emit_dot(d: Diagram, store=None) -> str:
    if store is not None and store.diagram != d:
        raise MixedDiagramError("path store belongs to another diagram")
    highlighted: set[Arrow] = set()
    if store is not None:
        for p in store.valid:
            if not p.is_direct:
                highlighted.update(p.arrows)
    out = ["digraph G {"]
    if store is not None:
        out.extend(f"  // valid: {p}" for p in store.sorted_paths())
    labels = d.label_map
    for name in d.nodes:
        attrs = f" [label={_quote(labels[name])}]" if name in labels else ""
        out.append(f"  {_quote(name)}{attrs};")
    for a in d.sorted_arrows():
        attrs = []
        if not a.positive:
            attrs += ["arrowhead=tee", "style=dashed"]
        if a in highlighted:
            attrs.append("color=blue")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        out.append(f"  {_quote(a.source)} -> {_quote(a.target)}{suffix};")
    out.append("}")
    return "\n".join(out) + "\n"


def _sign(polarity) -> str:
    return polarity.value


def path_record(p: PotentialPath) -> dict[str, Any]:
    return {"nodes": list(p.nodes), "sign": _sign(p.polarity)}


def _sorted_records(records: Iterable[dict]) -> list[dict]:
    return sorted(records, key=lambda r: json.dumps(r, sort_keys=True, ensure_ascii=False))


def emit_report_json(
    d: Diagram,
    *,
    store=None,
    conclusions: Mapping | None = None,
    extensions: Sequence | None = None,
    truth_facts: Iterable | None = None,
    size_facts: Iterable | None = None,
    equivalence: Mapping[str, Sequence] | None = None,
) -> str:
    """Stable-key JSON report; identical inputs give identical bytes."""
    for part in ([store] if store is not None else []) + list(extensions or []):
        if part.diagram != d:
            raise MixedDiagramError("report parts belong to another diagram")
    report: dict[str, Any] = {
        "nodes": list(d.nodes),
        "arrows": _sorted_records(
            {"from": a.source, "to": a.target, "sign": _sign(a.polarity)} for a in d.arrows
        ),
        "strategy": store.strategy.as_dict() if store is not None else {},
        "valid_paths": [path_record(p) for p in store.sorted_paths()] if store is not None else [],
        "conclusions": _sorted_records(
            {
                "from": x,
                "to": y,
                "verdict": c.value.value,
                "witnesses": [path_record(w) for w in c.witnesses],
            }
            for (x, y), c in (conclusions or {}).items()
        ),
        "extensions": [[path_record(p) for p in e.sorted_paths()] for e in (extensions or [])],
        "truth_facts": _sorted_records(f.as_record() for f in (truth_facts or ())),
        "size_facts": _sorted_records(f.as_record() for f in (size_facts or ())),
        "equivalence": {
            key: _sorted_records(r.as_record() for r in rows)
            for key, rows in (equivalence or {"def41_vs_paths": [], "fact52": []}).items()
        },
    }
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
