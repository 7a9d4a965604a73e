"""graph6 codec (short form, n <= 62), bit-exact per McKay's format.

Layout: one length byte chr(63+n), then the upper adjacency triangle in
column-major order ((0,1),(0,2),(1,2),(0,3),...) as a bit stream, zero-padded
to 6-bit groups, each group offset by 63.

The codec works on an integer edge mask whose bit b is the b-th edge in that
column-major order; Graph-level wrappers convert to and from adjacency masks.
"""

from __future__ import annotations

from .errors import Graph6Error, UnsupportedSizeError
from .graph import Graph

MAX_SHORT_N = 62

# reverse the bit order of a 6-bit group: stream bit j is group bit 5-j
_REV6 = tuple(
    sum(((i >> j) & 1) << (5 - j) for j in range(6)) for i in range(64)
)
_GROUP_CHAR = tuple(chr(63 + _REV6[i]) for i in range(64))
_CHAR_GROUP = {chr(63 + v): _REV6[v] for v in range(64)}


def _edge_order(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


def graph_to_mask(g: Graph) -> int:
    mask = 0
    bit = 0
    for v in range(1, g.n):
        av = g.adj_mask(v)
        for u in range(v):
            if av >> u & 1:
                mask |= 1 << bit
            bit += 1
    return mask


def mask_to_graph(n: int, mask: int) -> Graph:
    masks = [0] * n
    bit = 0
    for v in range(1, n):
        for u in range(v):
            if mask >> bit & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            bit += 1
    return Graph.from_adj_masks(masks)


def write_graph6_mask(n: int, mask: int) -> str:
    """Encode an (n, edge-mask) pair; the mask-level core of write_graph6."""
    if not 0 <= n <= MAX_SHORT_N:
        raise UnsupportedSizeError(
            f"short graph6 form supports 0 <= n <= {MAX_SHORT_N}, got {n}"
        )
    nbits = n * (n - 1) // 2
    if mask >> nbits:
        raise ValueError("edge mask has bits beyond the upper triangle")
    chars = [chr(63 + n)]
    gc = _GROUP_CHAR
    for shift in range(0, nbits, 6):
        chars.append(gc[(mask >> shift) & 63])
    return "".join(chars)


def parse_graph6_mask(text: str) -> tuple[int, int]:
    """Decode to (n, edge-mask); the mask-level core of parse_graph6."""
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(text):
        o = ord(ch)
        if o < 63 or o > 126:
            raise Graph6Error(f"byte {o!r} outside graph6 alphabet", i)
    head = ord(text[0]) - 63
    if head == 63:
        raise Graph6Error("long-form length header not supported", 0)
    n = head
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(text) < 1 + ngroups:
        raise Graph6Error(
            f"truncated body: need {ngroups} group bytes, have {len(text) - 1}",
            len(text),
        )
    if len(text) > 1 + ngroups:
        raise Graph6Error("trailing garbage after graph6 body", 1 + ngroups)
    mask = 0
    cg = _CHAR_GROUP
    shift = 0
    for ch in text[1:]:
        mask |= cg[ch] << shift
        shift += 6
    if mask >> nbits:
        # locate the byte holding the first nonzero padding bit
        bad = 1 + nbits // 6
        raise Graph6Error("nonzero padding bits", bad)
    return n, mask


def write_graph6(g: Graph) -> str:
    return write_graph6_mask(g.n, graph_to_mask(g))


def parse_graph6(text: str) -> Graph:
    n, mask = parse_graph6_mask(text)
    return mask_to_graph(n, mask)


def roundtrip_mask_range(n: int, lo: int, hi: int) -> int:
    """Self-check: first mask in [lo, hi) whose encode/decode round trip
    differs, or -1. Loop-specialized for exhaustive sweeps."""
    nbits = n * (n - 1) // 2
    shifts = tuple(range(0, nbits, 6))
    gc = _GROUP_CHAR
    cg = _CHAR_GROUP
    hdr = chr(63 + n)
    for mask in range(lo, hi):
        s = hdr + "".join([gc[(mask >> sh) & 63] for sh in shifts])
        m2 = 0
        shift = 0
        for ch in s[1:]:
            m2 |= cg[ch] << shift
            shift += 6
        if m2 != mask:
            return mask
    return -1
