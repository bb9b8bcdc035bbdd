"""Text formats for graphs: graph6, a plain edge list, and DOT export."""

from __future__ import annotations

from .errors import GraphError, ParseError
from .graph import Graph

FORMATS = ("graph6", "edgelist")
HEADER = ">>graph6<<"


# -- graph6 ------------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    raise GraphError("graph6 supports at most 258047 vertices")


def to_graph6(g: Graph) -> str:
    bitlist = [g.has_edge(i, j) for j in range(1, g.n) for i in range(j)]
    bitlist += [False] * (-len(bitlist) % 6)
    body = []
    for k in range(0, len(bitlist), 6):
        chunk = bitlist[k : k + 6]
        body.append(chr(63 + sum(b << (5 - i) for i, b in enumerate(chunk))))
    return _encode_n(g.n) + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
        base = len(HEADER)
    if not s:
        raise ParseError("empty graph6 string", offset=base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", offset=base + i)
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    else:
        if len(s) < 4 or s[1] == "~":
            raise ParseError("unsupported or truncated graph6 size field", offset=base)
        n = sum((ord(c) - 63) << sh for c, sh in zip(s[1:4], (12, 6, 0)))
        pos = 4
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = s[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}", offset=base + pos)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("nonzero padding bits", offset=base + pos + len(body) - 1)
    return Graph(n, tuple(adj))


# -- edge list ---------------------------------------------------------------------


def to_edgelist(g: Graph) -> str:
    return "\n".join([f"n={g.n}"] + [f"{u} {v}" for u, v in g.edges()])


def _parse_header(line: str, lineno: int) -> int:
    try:
        n = int(line[2:].strip())
    except ValueError:
        raise ParseError(f"bad vertex count {line!r}", line=lineno) from None
    if n < 0:
        raise ParseError("negative vertex count", line=lineno)
    return n


def _edgelist_rows(text: str, columns: int):
    """Yield (lineno, fields) for data rows and the declared vertex count."""
    n = None
    rows = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if first and line.startswith("n="):
            n = _parse_header(line, lineno)
            first = False
            continue
        first = False
        fields = line.split()
        if len(fields) != columns:
            raise ParseError(f"expected {columns} fields, got {len(fields)}", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise ParseError("negative vertex index", line=lineno)
        rows.append((lineno, u, v, fields[2:]))
    return n, rows


def from_edgelist(text: str) -> Graph:
    n, rows = _edgelist_rows(text, 2)
    if n is None:
        n = max((max(u, v) for _, u, v, _ in rows), default=-1) + 1
    adj = [0] * n
    for lineno, u, v, _ in rows:
        if u >= n or v >= n:
            raise ParseError(f"vertex out of range for n={n}", line=lineno)
        if u == v:
            raise GraphError(f"self-loop at vertex {u} (line {lineno})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# -- dispatch ----------------------------------------------------------------------


def parse_graph(text: str, format: str) -> Graph:
    if format == "graph6":
        return from_graph6(text)
    if format == "edgelist":
        return from_edgelist(text)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str, labels=None) -> str:
    if format == "graph6":
        return to_graph6(g)
    if format == "edgelist":
        return to_edgelist(g)
    if format == "dot":
        return to_dot(g, labels)
    raise ValueError(f"unknown graph format {format!r}")


def guess_format(path: str, text: str) -> str:
    if path.endswith((".g6", ".graph6")):
        return "graph6"
    if path.endswith((".txt", ".edges", ".edgelist", ".el")):
        return "edgelist"
    stripped = text.strip()
    if stripped.startswith(HEADER) or (stripped and " " not in stripped and "\n" not in stripped and not stripped.startswith("n=")):
        return "graph6"
    return "edgelist"


def to_dot(g: Graph, labels=None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is not None:
            label = str(labels[v]).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {v} [label="{label}"];')
        else:
            lines.append(f"  {v};")
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
