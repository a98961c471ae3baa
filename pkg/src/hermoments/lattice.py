"""Directed lattice paths on the quarter plane and the weights they carry.

From node ``(i, j)`` an edge leads to ``(i + 1, j - 1 + h)`` for every
``h >= 0`` with the target still in the quarter plane. An edge that goes
down one level carries weight 1; an edge from level ``a`` to level
``b >= a`` carries ``prod_{j=a+1}^{b+1} (x - j)``. The origin carries ``x``.
Summing ``x * weight`` over all paths from the origin to ``(k, 0)`` gives
``A(k, 1)``, and the number of such paths is the Catalan number ``C_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterator

import numpy as np

from .akl import falling_factorial
from .errors import UsageError
from .exact_core import Poly
from .moments import catalan, second_coefficient_closed

Node = tuple[int, int]


def edge_weight(a: Node, b: Node) -> Poly:
    if b[0] != a[0] + 1 or b[1] < 0 or b[1] < a[1] - 1:
        raise UsageError(f"no edge from {a} to {b}")
    if b[1] == a[1] - 1:
        return Poly.const(1)
    return falling_factorial(b[1] - a[1] + 1, shift=a[1] + 1)


@dataclass(frozen=True)
class LatticePath:
    nodes: tuple[Node, ...]

    def __post_init__(self):
        if not self.nodes or self.nodes[0] != (0, 0):
            raise UsageError("a lattice path starts at the origin")

    @property
    def end(self) -> Node:
        return self.nodes[-1]

    @cached_property
    def weight(self) -> Poly:
        return path_weight(self)

    def first_axis_touch(self) -> int | None:
        """Step index of the first node after the origin on level 0."""
        for i, (_, j) in enumerate(self.nodes[1:], start=1):
            if j == 0:
                return i
        return None


def path_weight(path: LatticePath) -> Poly:
    """Product of the edge weights; the origin factor is left to the caller."""
    w = Poly.const(1)
    for a, b in zip(path.nodes, path.nodes[1:]):
        w = w * edge_weight(a, b)
    return w


def iter_paths(k: int) -> Iterator[LatticePath]:
    """Depth-first walk over all paths from the origin to ``(k, 0)``.

    Children are visited by increasing level, so the order is deterministic.
    A node ``(i, j)`` is only entered when ``j <= k - i``, i.e. when the path
    can still come back down to level 0 by step k.
    """
    if k < 1:
        raise UsageError("k must be >= 1")
    stack: list[Node] = [(0, 0)]

    def walk() -> Iterator[LatticePath]:
        i, j = stack[-1]
        if i == k:
            if j == 0:
                yield LatticePath(tuple(stack))
            return
        for nj in range(max(j - 1, 0), k - i):
            stack.append((i + 1, nj))
            yield from walk()
            stack.pop()

    yield from walk()


def enumerate_paths(k: int) -> list[LatticePath]:
    return list(iter_paths(k))


def count_paths(k: int) -> int:
    """Path count by dynamic programming over levels, without storing paths."""
    if k < 1:
        raise UsageError("k must be >= 1")
    ways = {0: 1}
    for i in range(k):
        nxt: dict[int, int] = {}
        for j, w in ways.items():
            for nj in range(max(j - 1, 0), k - i):
                nxt[nj] = nxt.get(nj, 0) + w
        ways = nxt
    return ways.get(0, 0)


def reconstruct_A(k: int) -> Poly:
    total = Poly(())
    for p in iter_paths(k):
        total = total + path_weight(p)
    return total * Poly([0, 1])


def second_coeff_recursion(kmax: int) -> list[int]:
    """``s_0 .. s_kmax`` from the convolution recursion, with ``s_0 = 0``.

    ``s_k = sum_{j=1}^k (s_{k-j} C_{j-1} + C_{k-j} (s_{j-1} - j C_{j-1}))``
    """
    if kmax < 1:
        raise UsageError("kmax must be >= 1")
    C = [catalan(j) for j in range(kmax + 1)]
    s = [0]
    for k in range(1, kmax + 1):
        s.append(sum(s[k - j] * C[j - 1] + C[k - j] * (s[j - 1] - j * C[j - 1]) for j in range(1, k + 1)))
    return s


def catalan_recursion_check(kmax: int) -> bool:
    """Path counts obey ``d_{k+1} = sum d_i d_{k-i}`` and equal ``C(2k,k)/(k+1)``."""
    if kmax < 1:
        raise UsageError("kmax must be >= 1")
    d = [1] + [sum(1 for _ in iter_paths(k)) for k in range(1, kmax + 1)]
    convolution = all(d[m + 1] == sum(d[i] * d[m - i] for i in range(m + 1)) for m in range(kmax))
    closed = all(d[k] * (k + 1) == comb(2 * k, k) for k in range(kmax + 1))
    return convolution and closed


def lift(path: LatticePath) -> LatticePath:
    """Raise every non-origin node one level and append a final down-step."""
    i_end = path.end[0]
    raised = [(0, 0)] + [(i, j + 1) for i, j in path.nodes[1:]]
    return LatticePath(tuple(raised) + ((i_end + 1, 0),))


def lifting_bijection_check(k: int) -> bool:
    """Paths to ``(k, 0)`` first touching level 0 at step k are exactly the
    lifts of paths to ``(k-1, 0)``, there are ``C_{k-1}`` of them, and lifting
    shifts ``x * weight`` by one: ``weight(lift P)(x) = (x * weight P)(x - 1)``."""
    if k < 1:
        raise UsageError("k must be >= 1")
    touching = {p.nodes for p in iter_paths(k) if p.first_axis_touch() == k}
    base = [LatticePath(((0, 0),))] if k == 1 else list(iter_paths(k - 1))
    lifted = [lift(p) for p in base]
    if {p.nodes for p in lifted} != touching or len(touching) != catalan(k - 1):
        return False
    x = Poly([0, 1])
    return all(path_weight(q) == (x * path_weight(p)).translate(-1) for p, q in zip(base, lifted))


def walk_first_negative_counts(k: int) -> tuple[list[int], int]:
    """Classify all ``2**(2k-1)`` simple +-1 walks by the step at which they
    first go negative.

    Returns ``(counts, nonneg)`` where ``counts[j]`` is the number of walks
    first negative at step ``2j + 1`` and ``nonneg`` the number never negative.
    """
    if k < 1:
        raise UsageError("k must be >= 1")
    steps = 2 * k - 1
    codes = np.arange(2**steps, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(steps, dtype=np.int64)) & 1).astype(np.int8)
    pos = np.cumsum(2 * bits - 1, axis=1, dtype=np.int8)
    negative = pos < 0
    ever = negative.any(axis=1)
    first = np.argmax(negative, axis=1) + 1  # 1-based step
    first = first[ever]
    if np.any(first % 2 == 0):
        raise AssertionError("a walk first went negative at an even step")
    counts = np.bincount((first - 1) // 2, minlength=k)
    return [int(c) for c in counts], int((~ever).sum())


def walk_identity_check(k: int) -> bool:
    """``sum_{j<k} C_j 4^(k-j-1) + C(2k-1, k) = 2^(2k-1)``, by formula and by
    brute-force enumeration of walks."""
    if k < 1:
        raise UsageError("k must be >= 1")
    expected = [catalan(j) * 2 ** (2 * (k - j - 1)) for j in range(k)]
    nonneg_expected = comb(2 * k - 1, k)
    formula = sum(expected) + nonneg_expected == 2 ** (2 * k - 1)
    counts, nonneg = walk_first_negative_counts(k)
    brute = counts == expected and nonneg == nonneg_expected
    closed = -sum(expected) == second_coefficient_closed(k)
    return formula and brute and closed
