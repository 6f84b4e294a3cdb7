"""graph6 codec, a plain edge-list text format, and streaming corpus reading.

graph6 layout implemented here (and exercised exhaustively by the tests):

* size: one byte ``n + 63`` for n <= 62, else the prefix byte 126 (``~``)
  followed by three bytes carrying n in big-endian 6-bit groups, each +63.
  That extended form covers 63 <= n <= 258047; anything larger is rejected.
* payload: ``ceil(n(n-1)/2 / 6)`` bytes. The bit stream is the adjacency
  upper triangle in column-major order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
  with the most significant bit of each 6-bit group first; each group value
  +63 yields a printable byte in [63, 126].
* padding bits after the last adjacency bit must be zero; strict mode
  enforces this, lenient mode tolerates third-party sloppiness.

The edge-list format is line oriented: ``#`` starts a comment, the first
data line is ``n m``, and the following m data lines are ``u v`` pairs.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import Callable, Iterator, NamedTuple, TextIO, Union

from .graph import Graph, from_edge_list

__all__ = [
    "FormatError",
    "CorpusRecord",
    "parse_graph6",
    "write_graph6",
    "parse_edge_list",
    "read_corpus",
    "GRAPH6_MAX_N",
    "GRAPH6_HEADER",
]

GRAPH6_MAX_N = 258047
GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Malformed graph6 or edge-list input; ``line`` locates it when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line

    def __str__(self) -> str:
        base = super().__str__()
        return base if self.line is None else f"line {self.line}: {base}"


class CorpusRecord(NamedTuple):
    line_number: int
    graph: Graph
    source_id: str


def parse_graph6(line: str, strict: bool = True) -> Graph:
    """Decode one graph6 record.

    A leading ``>>graph6<<`` header is tolerated and skipped. sparse6 and
    digraph6 records are rejected with a clear message. In strict mode
    nonzero padding bits are a :class:`FormatError`.
    """
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 record")
    if s[0] == ":":
        raise FormatError("sparse6 records are not supported")
    if s[0] == "&":
        raise FormatError("digraph6 records are not supported")
    if s[0] == ">":
        raise FormatError(f"unrecognized headerphrase (only {GRAPH6_HEADER!r} is accepted)")

    vals = []
    for i, ch in enumerate(s):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise FormatError(f"invalid graph6 character {ch!r} at column {i + 1}")
        vals.append(code - 63)

    if vals[0] <= 62:
        n = vals[0]
        pos = 1
    else:
        # extended size: '~' then three 6-bit groups, big-endian
        if len(vals) < 4:
            raise FormatError("truncated extended vertex count")
        if vals[1] == 63:
            raise FormatError(f"vertex counts above {GRAPH6_MAX_N} are not supported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
        if strict and n <= 62:
            raise FormatError("non-canonical extended size for n <= 62")
    if n == 0:
        raise FormatError("graph6 record declares an empty vertex set")

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = vals[pos:]
    if len(payload) < need:
        raise FormatError(f"truncated payload: need {need} groups, found {len(payload)}")
    if len(payload) > need:
        raise FormatError(f"trailing data after payload: {len(payload) - need} extra groups")
    pad = need * 6 - nbits
    if strict and pad and (payload[-1] & ((1 << pad) - 1)):
        raise FormatError("nonzero padding bits")

    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (payload[k // 6] >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    edges.sort()
    return Graph(n, tuple(edges))


def write_graph6(g: Graph) -> str:
    """Encode a graph canonically; ``parse_graph6(write_graph6(g)) == g``."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"cannot encode n={g.n}; graph6 support here caps at {GRAPH6_MAX_N}")
    if g.n <= 62:
        head = chr(g.n + 63)
    else:
        head = "~" + chr((g.n >> 12) + 63) + chr(((g.n >> 6) & 63) + 63) + chr((g.n & 63) + 63)
    nbits = g.n * (g.n - 1) // 2
    groups = bytearray((nbits + 5) // 6)
    for u, v in g.edges:
        k = v * (v - 1) // 2 + u
        groups[k // 6] |= 1 << (5 - k % 6)
    return head + "".join(chr(b + 63) for b in groups)


def parse_edge_list(text: str) -> Graph:
    """Parse one edge-list record (header ``n m`` then m ``u v`` lines)."""
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split("#", 1)[0].split()
        if not fields:
            continue
        if len(fields) != 2:
            raise FormatError(f"expected two whitespace-separated fields, got {raw!r}", line=lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"non-integer field in {raw!r}", line=lineno) from None
        if header is None:
            header = (a, b)
        else:
            pairs.append((a, b))
    if header is None:
        raise FormatError("missing 'n m' header line")
    n, m = header
    if m != len(pairs):
        raise FormatError(f"header declares {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)


Source = Union[str, Path, TextIO]
ErrorHandler = Callable[[FormatError], None]


def read_corpus(
    source: Source,
    fmt: str = "graph6",
    strict: bool = True,
    on_error: ErrorHandler | None = None,
) -> Iterator[CorpusRecord]:
    """Lazily yield :class:`CorpusRecord` values from a path or text stream.

    graph6 corpora hold one record per line; blank lines and a leading
    ``>>graph6<<`` header line are skipped. Edge-list corpora hold records
    separated by blank lines. In strict mode the first malformed record
    aborts with its line number; in lenient mode the record is skipped after
    being reported to ``on_error`` (when given).
    """
    if fmt not in ("graph6", "edgelist"):
        raise ValueError(f"unknown corpus format {fmt!r}")
    if isinstance(source, io.TextIOBase) or hasattr(source, "read"):
        name = getattr(source, "name", "<stream>")
        yield from _scan(source, str(name), fmt, strict, on_error)
    else:
        with open(source, "r", encoding="utf-8") as fh:
            yield from _scan(fh, str(source), fmt, strict, on_error)


def _emit_error(exc: FormatError, strict: bool, on_error: ErrorHandler | None) -> None:
    if strict:
        raise exc
    if on_error is not None:
        on_error(exc)


def _scan(stream, source_id, fmt, strict, on_error) -> Iterator[CorpusRecord]:
    if fmt == "graph6":
        for lineno, raw in enumerate(stream, start=1):
            s = raw.strip()
            if not s or s == GRAPH6_HEADER:
                continue
            try:
                g = parse_graph6(s, strict=strict)
            except FormatError as exc:
                _emit_error(FormatError(exc.args[0], line=lineno), strict, on_error)
                continue
            yield CorpusRecord(lineno, g, source_id)
        return

    block: list[str] = []
    block_start = 0

    def flush() -> Iterator[CorpusRecord]:
        nonlocal block
        if not block:
            return
        text = "\n".join(block)
        start = block_start
        block = []
        try:
            g = parse_edge_list(text)
        except FormatError as exc:
            at = start if exc.line is None else start + exc.line - 1
            _emit_error(FormatError(exc.args[0], line=at), strict, on_error)
            return
        except ValueError as exc:
            _emit_error(FormatError(str(exc), line=start), strict, on_error)
            return
        yield CorpusRecord(start, g, source_id)

    for lineno, raw in enumerate(stream, start=1):
        if raw.strip():
            if not block:
                block_start = lineno
            block.append(raw.rstrip("\n"))
        else:
            yield from flush()
    yield from flush()
