"""Two-terminal compositions, a brute-force path-count oracle, and closed
forms for the average reliability of series-prefixed parallel channels.

A channel label u of m bits corresponds to a series/parallel composition of
2^m identical devices between a source S and a sink T: starting from a single
edge, bit u_0 is applied first (outermost), each 0-bit replaces every edge by
two in series, each 1-bit by two in parallel.  The network reliability with
i.i.d. device closing probability p equals the channel polynomial Z_u(p), and
the subset-enumeration oracle recovers its path-count coefficients entirely
independently of the polynomial recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .monomials import Monomial
from .polynomials import PathCounts

ORACLE_EDGE_CAP = 16
GRAPH_M_CAP = 12


@dataclass(frozen=True)
class CompositionParams:
    """Size, width, and length of the composition labelled by u."""

    m: int
    u: Monomial
    n: int  # number of devices, 2^m
    w: int  # minimal cut size, 2^|u|
    l: int  # minimal path length, 2^(m-|u|)

    @classmethod
    def of(cls, u: Monomial) -> "CompositionParams":
        d = u.degree
        return cls(u.m, u, 1 << u.m, 1 << d, 1 << (u.m - d))


@dataclass(frozen=True)
class CompositionGraph:
    """Multigraph of identical devices with terminals S = node 0, T = node 1."""

    node_count: int
    edges: tuple[tuple[int, int], ...]
    source: int = 0
    sink: int = 1


def build_graph(u: Monomial) -> CompositionGraph:
    """Recursive series/parallel replacement, outermost bit u_0 first.

    Each step replaces every current edge by two edges (in series for a 0-bit,
    in parallel for a 1-bit), mirroring the nesting of the channel recursion;
    the final graph has exactly 2^m edges.
    """
    if u.m > GRAPH_M_CAP:
        raise ValueError(f"m={u.m} exceeds graph cap {GRAPH_M_CAP}")
    nodes = 2
    edges: list[tuple[int, int]] = [(0, 1)]
    for i in range(u.m):
        parallel = (u.bits >> i) & 1
        nxt: list[tuple[int, int]] = []
        for a, b in edges:
            if parallel:
                nxt.append((a, b))
                nxt.append((a, b))
            else:
                c = nodes
                nodes += 1
                nxt.append((a, c))
                nxt.append((c, b))
        edges = nxt
    return CompositionGraph(nodes, tuple(edges))


def oracle_path_counts(g: CompositionGraph) -> PathCounts:
    """Count, for each i, the i-edge subsets connecting S to T.

    Enumerates all 2^edges subsets and tests connectivity with a union-find
    per subset; independent of (and a ground truth for) the basis-conversion
    route.  Capped at 16 edges.
    """
    e = len(g.edges)
    if e > ORACLE_EDGE_CAP:
        raise ValueError(f"{e} edges exceeds oracle cap {ORACLE_EDGE_CAP}")
    counts = [0] * (e + 1)
    edges = g.edges
    s, t = g.source, g.sink
    nodes = g.node_count
    for mask in range(1 << e):
        parent = list(range(nodes))
        mm = mask
        idx = 0
        while mm:
            if mm & 1:
                a, b = edges[idx]
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    parent[a] = b
            mm >>= 1
            idx += 1
        a = s
        while parent[a] != a:
            a = parent[a]
        b = t
        while parent[b] != b:
            b = parent[b]
        if a == b:
            counts[mask.bit_count()] += 1
    return PathCounts(e, tuple(counts))


def ni_inclusion_exclusion(m: int, i_ones: int) -> PathCounts:
    """Path counts of the channel with i_ones leading 1-bits (rest 0).

    The composition is w = 2^i_ones minimal paths of length l = 2^(m-i_ones)
    in parallel; counting i-edge connecting subsets by how many complete
    minimal paths they contain gives

        N_i = sum_{j>=1} (-1)^(j+1) C(w, j) C(n - j*l, n - i)   for i >= l,

    and N_i = 0 below the minimal path length.
    """
    if not 0 <= i_ones <= m:
        raise ValueError(f"i_ones={i_ones} must be in 0..m={m}")
    n = 1 << m
    w = 1 << i_ones
    l = 1 << (m - i_ones)
    counts = [0] * (n + 1)
    for i in range(l, n + 1):
        counts[i] = sum(
            (-1) ** (j + 1) * comb(w, j) * comb(n - j * l, n - i)
            for j in range(1, i // l + 1)
        )
    return PathCounts(n, tuple(counts))


def gen_binomial(x: Fraction, k: int) -> Fraction:
    """Generalized binomial coefficient x(x-1)...(x-k+1) / k! over rationals."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = Fraction(1)
    for t in range(k):
        num *= x - t
    for t in range(2, k + 1):
        num /= t
    return num


def avr_closed_form(m: int, i_ones: int) -> Fraction:
    """Exact average reliability of the channel with i_ones leading 1-bits:

        1 - 1 / C(2^i + 2^(i-m), 2^i)   with i = i_ones,

    the generalized binomial taking the rational upper argument
    2^i + 2^(i-m) = (n+1)/l.  Agrees exactly with integrating the channel
    polynomial.
    """
    if not 0 <= i_ones <= m:
        raise ValueError(f"i_ones={i_ones} must be in 0..m={m}")
    w = 1 << i_ones
    x = Fraction(w) + Fraction(1, 1 << (m - i_ones))
    return 1 - 1 / gen_binomial(x, w)


def avr_closed_form_complement(m: int, i_zeros: int) -> Fraction:
    """Average reliability of the complementary channel (i_zeros leading
    0-bits, rest 1): 1 / C(2^i + 2^(i-m), 2^i) with i = i_zeros."""
    if not 0 <= i_zeros <= m:
        raise ValueError(f"i_zeros={i_zeros} must be in 0..m={m}")
    w = 1 << i_zeros
    x = Fraction(w) + Fraction(1, 1 << (m - i_zeros))
    return 1 / gen_binomial(x, w)
