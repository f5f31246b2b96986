"""Line-oriented text format for ribbon graphs.

::

    ribbongraph 1
    vertices 3
    edges 3
    rot 0: 0.0 2.1
    rot 1: 1.0 0.1
    rot 2: 2.0 1.1
    twist 1 2

``#`` starts a comment, blank lines are ignored.  Rotations are cyclic and
counterclockwise; every end ``k.0`` and ``k.1`` appears exactly once.  The
encoder emits vertices in index order with each rotation starting at its
lexicographically smallest end, so decode/encode round-trips are stable.
"""

from __future__ import annotations

from .ribbon import RibbonGraph


class ParseError(ValueError):
    """Malformed ribbon-graph file; carries the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _meaningful_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def decode(text: str) -> RibbonGraph:
    """Parse the ribbon-graph format; malformed input raises :class:`ParseError`."""
    lines = list(_meaningful_lines(text))
    pos = 0

    def take(expected: str) -> tuple[int, list[str]]:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(len(lines) + 1, f"missing '{expected}' line")
        lineno, line = lines[pos]
        pos += 1
        parts = line.split()
        if parts[0] != expected:
            raise ParseError(lineno, f"expected '{expected}', got '{parts[0]}'")
        return lineno, parts

    lineno, parts = take("ribbongraph")
    if parts[1:] != ["1"]:
        raise ParseError(lineno, "unsupported format version (want 'ribbongraph 1')")
    lineno, parts = take("vertices")
    try:
        (nv,) = parts[1:]
        nv = int(nv)
        if nv < 0:
            raise ValueError
    except ValueError:
        raise ParseError(lineno, "bad vertex count") from None
    lineno, parts = take("edges")
    try:
        (ne,) = parts[1:]
        ne = int(ne)
        if ne < 0:
            raise ValueError
    except ValueError:
        raise ParseError(lineno, "bad edge count") from None

    rotations: dict[int, tuple[tuple[int, int], ...]] = {}
    seen_ends: dict[tuple[int, int], int] = {}
    twists: set[int] = set()
    while pos < len(lines):
        lineno, line = lines[pos]
        pos += 1
        parts = line.split()
        if parts[0] == "rot":
            if len(parts) < 2 or not parts[1].endswith(":"):
                raise ParseError(lineno, "rot line must read 'rot <v>: <ends...>'")
            try:
                v = int(parts[1][:-1])
            except ValueError:
                raise ParseError(lineno, "bad vertex index on rot line") from None
            if not 0 <= v < nv:
                raise ParseError(lineno, f"vertex {v} out of range 0..{nv - 1}")
            if v in rotations:
                raise ParseError(lineno, f"duplicate rot line for vertex {v}")
            rot = []
            for tok in parts[2:]:
                k, dot, t = tok.partition(".")
                if dot != "." or t not in ("0", "1"):
                    raise ParseError(lineno, f"bad edge-end '{tok}' (want k.0 or k.1)")
                try:
                    k = int(k)
                except ValueError:
                    raise ParseError(lineno, f"bad edge index in '{tok}'") from None
                if not 0 <= k < ne:
                    raise ParseError(lineno, f"unknown edge index {k}")
                end = (k, int(t))
                if end in seen_ends:
                    raise ParseError(
                        lineno,
                        f"edge-end {k}.{t} already used on line {seen_ends[end]}",
                    )
                seen_ends[end] = lineno
                rot.append(end)
            rotations[v] = tuple(rot)
        elif parts[0] == "twist":
            for tok in parts[1:]:
                try:
                    k = int(tok)
                except ValueError:
                    raise ParseError(lineno, f"bad twist index '{tok}'") from None
                if not 0 <= k < ne:
                    raise ParseError(lineno, f"unknown edge index {k} in twist line")
                twists.add(k)
        else:
            raise ParseError(lineno, f"unknown directive '{parts[0]}'")

    for v in range(nv):
        if v not in rotations:
            raise ParseError(len(text.splitlines()) + 1, f"missing rot line for vertex {v}")
    for k in range(ne):
        for t in (0, 1):
            if (k, t) not in seen_ends:
                raise ParseError(
                    len(text.splitlines()) + 1, f"edge-end {k}.{t} missing"
                )
    twisted = tuple(k in twists for k in range(ne))
    return RibbonGraph(nv, ne, tuple(rotations[v] for v in range(nv)), twisted)


def encode(g: RibbonGraph) -> str:
    """Canonical text form; ``decode(encode(g))`` is semantically identical."""
    out = ["ribbongraph 1", f"vertices {g.vertex_count}", f"edges {g.edge_count}"]
    for v in range(g.vertex_count):
        rot = g.rotations[v]
        if rot:
            start = rot.index(min(rot))
            rot = rot[start:] + rot[:start]
        ends = " ".join(f"{k}.{t}" for (k, t) in rot)
        out.append(f"rot {v}:" + (" " + ends if ends else ""))
    tw = [str(k) for k in range(g.edge_count) if g.twisted[k]]
    if tw:
        out.append("twist " + " ".join(tw))
    return "\n".join(out) + "\n"
