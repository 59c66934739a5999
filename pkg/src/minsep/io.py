"""Plain-text graph format.

::

    # optional comments
    n 5
    0 1
    1 2
    label 0 a

Edges are written ``u v`` with ``u < v``; ``label`` lines follow the edges.
"""
from __future__ import annotations

from pathlib import Path
from typing import List, Optional, Union

from .graph import Graph, GraphError, build_graph


class GraphFormatError(GraphError):
    def __init__(self, message: str, lineno: Optional[int] = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _int(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise GraphFormatError(f"expected a non-negative decimal integer, got {tok!r}", lineno)
    return int(tok)


def parse_graph(text: str) -> Graph:
    n = None
    edges = []
    seen = set()
    labels: Optional[List[str]] = None
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        toks = line.split()
        if n is None:
            if len(toks) != 2 or toks[0] != "n":
                raise GraphFormatError("first line must be 'n <count>'", lineno)
            n = _int(toks[1], lineno)
            continue
        if toks[0] == "label":
            parts = line.split(" ", 2)
            if len(parts) != 3 or not parts[2]:
                raise GraphFormatError("expected 'label <v> <string>'", lineno)
            v = _int(parts[1], lineno)
            if v >= n:
                raise GraphFormatError(f"label for vertex {v} out of range", lineno)
            if labels is None:
                labels = [str(i) for i in range(n)]
            labels[v] = parts[2]
            continue
        if labels is not None:
            raise GraphFormatError("edge line after label lines", lineno)
        if len(toks) != 2:
            raise GraphFormatError(f"expected '<u> <v>', got {line!r}", lineno)
        u, v = _int(toks[0], lineno), _int(toks[1], lineno)
        if not u < v < n:
            raise GraphFormatError(f"edge must satisfy 0 <= u < v < {n}, got {u} {v}", lineno)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header")
    return build_graph(n, edges, labels)


def format_graph(G: Graph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {G.n}")
    lines.extend(f"{u} {v}" for u, v in G.edges())
    if G.labels is not None:
        lines.extend(f"label {v} {lab}" for v, lab in enumerate(G.labels))
    return "\n".join(lines) + "\n"


def read_graph(path: Union[str, Path]) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(G: Graph, path: Union[str, Path], comment: Optional[str] = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_graph(G, comment))
