"""Graphviz DOT output.

Inputs sit in a left rank and outputs in a right rank. Swaps are not drawn
as nodes; they only show up as crossing edges.
"""

from __future__ import annotations

from synprop.ancestry import CocomMap, corelation_of
from synprop.corel import Corelation
from synprop.cospan import Cospan
from synprop.syn import Leaf, SynMorphism


def _header(name: str) -> list[str]:
    return [f"digraph {name} {{", "  rankdir=LR;", '  node [fontname="Helvetica"];']


def _boundary(prefix: str, count: int, shape: str = "plaintext") -> list[str]:
    lines = ["  { rank=same;"]
    for k in range(count):
        lines.append(f'    {prefix}{k} [label="{prefix}{k}", shape={shape}];')
    lines.append("  }")
    return lines


def syn_to_dot(f: SynMorphism) -> str:
    lines = _header("syn")
    lines += _boundary("i", f.m)
    lines += _boundary("o", f.n)
    counter = iter(range(f.node_count()))

    def walk(tree, source: str, port: str = "") -> None:
        attrs = f' [taillabel="{port}"]' if port else ""
        if isinstance(tree, Leaf):
            lines.append(f"  {source} -> o{tree.label}{attrs};")
            return
        name = f"d{next(counter)}"
        lines.append(f'  {name} [label="δ", shape=circle];')
        lines.append(f"  {source} -> {name}{attrs};")
        walk(tree.left, name, "L")
        walk(tree.right, name, "R")

    for i, tree in enumerate(f.trees):
        walk(tree, f"i{i}")
    lines.append("}")
    return "\n".join(lines)


def corel_to_dot(r: Corelation) -> str:
    """Each class is an undirected cluster of boundary points, no apex node."""
    lines = ["graph corel {", "  rankdir=LR;", '  node [fontname="Helvetica"];']
    lines += _boundary("i", r.m)
    lines += _boundary("o", r.n)
    for c, block in enumerate(r.named_classes()):
        lines.append(f"  subgraph cluster_{c} {{")
        lines.append('    style=dashed; label="";')
        lines.append("    " + "; ".join(block) + ";")
        for x, y in zip(block, block[1:]):
            lines.append(f"    {x} -- {y};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines)


def cospan_to_dot(c: Cospan) -> str:
    lines = _header("cospan")
    lines += _boundary("i", c.m)
    lines += ["  { rank=same;"]
    for k in range(c.apex):
        lines.append(f'    n{k} [label="{k}", shape=point, width=0.15];')
    lines.append("  }")
    lines += _boundary("o", c.n)
    for k, x in enumerate(c.a.table):
        lines.append(f"  i{k} -> n{x};")
    for k, x in enumerate(c.b.table):
        lines.append(f"  n{x} -> o{k} [dir=back];")
    lines.append("}")
    return "\n".join(lines)


def to_dot(x) -> str:
    if isinstance(x, SynMorphism):
        return syn_to_dot(x)
    if isinstance(x, Corelation):
        return corel_to_dot(x)
    if isinstance(x, Cospan):
        return cospan_to_dot(x)
    if isinstance(x, CocomMap):
        return corel_to_dot(corelation_of(x))
    raise TypeError(f"cannot render {type(x).__name__}")
