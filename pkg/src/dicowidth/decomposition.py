"""Directed path-decompositions and arboreal tree-decompositions.

Both are plain immutable containers; validity is the verifier's business.

Text formats (``#`` comments allowed)::

    pathdecomp <r>
    bag <labels...>                 one line per bag, in order

    treedecomp <m>
    node <id> <parent|-> ; <W labels> ; <X labels on the arc from parent>
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class DecompositionFormatError(ValueError):
    pass


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[str], ...]

    @classmethod
    def of(cls, bags: Iterable[Iterable[str]]) -> "PathDecomposition":
        return cls(tuple(frozenset(b) for b in bags))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def vertices(self) -> frozenset[str]:
        return frozenset().union(*self.bags)

    def __len__(self) -> int:
        return len(self.bags)


@dataclass(frozen=True)
class ArborealDecomposition:
    """Out-tree on nodes ``0..m-1`` given by parent pointers.

    ``x[i]`` is the guard set on the arc ``(parent[i], i)``; it is unused (and
    empty) for the root.
    """

    parent: tuple[int | None, ...]
    w: tuple[frozenset[str], ...]
    x: tuple[frozenset[str], ...]

    def __post_init__(self):
        if not (len(self.parent) == len(self.w) == len(self.x)):
            raise DecompositionFormatError("parent, W and X must have the same length")

    def __len__(self) -> int:
        return len(self.parent)

    @property
    def roots(self) -> list[int]:
        return [i for i, p in enumerate(self.parent) if p is None]

    @property
    def root(self) -> int:
        roots = self.roots
        if len(roots) != 1:
            raise DecompositionFormatError(f"expected exactly one root, found {len(roots)}")
        return roots[0]

    def arcs(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self.parent):
            if p is not None:
                yield p, i

    def children(self) -> list[list[int]]:
        kids: list[list[int]] = [[] for _ in self.parent]
        for p, i in self.arcs():
            kids[p].append(i)
        return kids

    def node_sets(self) -> list[frozenset[str]]:
        """``W_r`` together with the guards of all arcs touching ``r``, per node."""
        sets = [set(w) for w in self.w]
        for p, i in self.arcs():
            sets[p] |= self.x[i]
            sets[i] |= self.x[i]
        return [frozenset(s) for s in sets]

    @property
    def width(self) -> int:
        return max((len(s) for s in self.node_sets()), default=0) - 1

    def is_path(self) -> bool:
        return all(len(k) <= 1 for k in self.children())


def _labels(tokens: Iterable[str]) -> frozenset[str]:
    return frozenset(tokens)


def _sorted(s: Iterable[str]) -> str:
    return " ".join(sorted(s))


def format_path_decomposition(p: PathDecomposition) -> str:
    lines = [f"pathdecomp {len(p)}"]
    lines.extend(("bag " + _sorted(b)).rstrip() for b in p.bags)
    return "\n".join(lines) + "\n"


def format_tree_decomposition(d: ArborealDecomposition) -> str:
    lines = [f"treedecomp {len(d)}"]
    for i in range(len(d)):
        parent = "-" if d.parent[i] is None else str(d.parent[i])
        lines.append(f"node {i} {parent} ; {_sorted(d.w[i])} ; {_sorted(d.x[i])}".rstrip())
    return "\n".join(lines) + "\n"


def _content(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def parse_decomposition(text: str) -> PathDecomposition | ArborealDecomposition:
    lines = _content(text)
    # structured CLI output prefixes the certificate with key=value lines
    while lines and "=" in lines[0][1].split()[0]:
        lines.pop(0)
    if not lines:
        raise DecompositionFormatError("empty decomposition file")
    lineno, header = lines[0]
    head = header.split()
    if len(head) != 2 or head[0] not in ("pathdecomp", "treedecomp") or not head[1].isdigit():
        raise DecompositionFormatError(f"line {lineno}: bad header {header!r}")
    count = int(head[1])
    body = lines[1:]
    if len(body) != count:
        raise DecompositionFormatError(f"header announces {count} records, found {len(body)}")
    if head[0] == "pathdecomp":
        bags = []
        for lineno, line in body:
            toks = line.split()
            if toks[0] != "bag":
                raise DecompositionFormatError(f"line {lineno}: expected 'bag'")
            bags.append(_labels(toks[1:]))
        return PathDecomposition(tuple(bags))

    parent: list[int | None] = [None] * count
    w: list[frozenset[str]] = [frozenset()] * count
    x: list[frozenset[str]] = [frozenset()] * count
    seen = set()
    for lineno, line in body:
        fields = [f.split() for f in line.split(";")]
        if len(fields) != 3 or len(fields[0]) != 3 or fields[0][0] != "node":
            raise DecompositionFormatError(f"line {lineno}: expected 'node <id> <parent> ; W ; X'")
        _, ident, par = fields[0]
        try:
            i = int(ident)
            p = None if par == "-" else int(par)
        except ValueError:
            raise DecompositionFormatError(f"line {lineno}: node ids must be integers") from None
        if not 0 <= i < count or (p is not None and not 0 <= p < count) or i in seen:
            raise DecompositionFormatError(f"line {lineno}: node id out of range or repeated")
        seen.add(i)
        parent[i] = p
        w[i] = _labels(fields[1])
        x[i] = _labels(fields[2])
    return ArborealDecomposition(tuple(parent), tuple(w), tuple(x))


def path_decomposition_to_dot(p: PathDecomposition, name: str = "P") -> str:
    out = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=box];"]
    for i, b in enumerate(p.bags):
        out.append(f'  b{i} [label="{{{", ".join(sorted(b))}}}"];')
    for i in range(len(p.bags) - 1):
        out.append(f"  b{i} -> b{i + 1};")
    out.append("}")
    return "\n".join(out) + "\n"


def tree_decomposition_to_dot(d: ArborealDecomposition, name: str = "T") -> str:
    out = [f"digraph {name} {{", "  node [shape=box];"]
    for i in range(len(d)):
        out.append(f'  t{i} [label="W={{{", ".join(sorted(d.w[i]))}}}"];')
    for p, i in d.arcs():
        out.append(f'  t{p} -> t{i} [label="X={{{", ".join(sorted(d.x[i]))}}}"];')
    out.append("}")
    return "\n".join(out) + "\n"
