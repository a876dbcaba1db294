"""Hirzebruch-Jung data for a cyclic quotient surface singularity 1/n(1,a).

The group is fixed by a coprime pair (n, a).  Everything downstream is built
from the continued fraction n/a = [alpha_1, ..., alpha_r] and the two integer
series it generates:

    i_0 = n, i_1 = a,  i_t = alpha_{t-1} i_{t-1} - i_{t-2}   (down to 0)
    j_0 = 0, j_1 = 1,  j_t = alpha_{t-1} j_{t-1} - j_{t-2}   (up to n)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

MAX_ORDER = 2**31


class GroupError(ValueError):
    """Invalid (n, a) pair."""


class NonCoprime(GroupError):
    pass


class OutOfRange(GroupError):
    pass


@dataclass(frozen=True, order=True)
class GroupParams:
    n: int
    a: int

    def __str__(self) -> str:
        return f"1/{self.n}(1,{self.a})"


@dataclass(frozen=True)
class HJData:
    alphas: tuple[int, ...]
    i_series: tuple[int, ...]
    j_series: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.alphas)

    @property
    def n(self) -> int:
        return self.i_series[0]

    @property
    def a(self) -> int:
        return self.i_series[1]

    @property
    def specials(self) -> tuple[int, ...]:
        """The non-free special indices i_1 > ... > i_r."""
        return self.i_series[1:-1]


@dataclass(frozen=True)
class DualVertex:
    series_index: int
    label: int
    self_intersection: int

    @property
    def name(self) -> str:
        return f"E{self.label}"


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[DualVertex, ...]
    edges: tuple[tuple[int, int], ...]
    fundamental_cycle: tuple[int, ...]

    def self_intersection_of_cycle(self) -> int:
        # Z.Z for Z = sum c_u E_u on a chain: diagonal terms plus 2 per edge.
        z = self.fundamental_cycle
        total = sum(c * c * v.self_intersection for c, v in zip(z, self.vertices))
        total += 2 * sum(z[u - 1] * z[v - 1] for u, v in self.edges)
        return total

    def ascii_chain(self) -> str:
        return " -- ".join(f"{v.name}({v.self_intersection})" for v in self.vertices)


def validate_group(n: int, a: int) -> GroupParams:
    if isinstance(n, bool) or isinstance(a, bool) or not isinstance(n, int) or not isinstance(a, int):
        raise OutOfRange(f"n and a must be integers, got {n!r}, {a!r}")
    if n < 2:
        raise OutOfRange(f"n must be at least 2, got {n}")
    if n > MAX_ORDER:
        raise OutOfRange(f"n must not exceed 2^31, got {n}")
    if not 1 <= a <= n - 1:
        raise OutOfRange(f"a must lie in [1, n-1] = [1, {n - 1}], got {a}")
    if gcd(n, a) != 1:
        raise NonCoprime(f"gcd(n,a) must be 1, got gcd({n},{a}) = {gcd(n, a)}")
    return GroupParams(n, a)


def hj_expand(g: GroupParams) -> HJData:
    """Expand n/a as a Hirzebruch-Jung continued fraction.

    Uses ceiling division alpha_t = ceil(i_{t-1} / i_t); the i-values strictly
    decrease, so this terminates after at most n - 1 steps.

    >>> hj_expand(GroupParams(12, 7)).alphas
    (2, 4, 2)
    """
    i_series = [g.n, g.a]
    j_series = [0, 1]
    alphas = []
    while i_series[-1] != 0:
        prev, cur = i_series[-2], i_series[-1]
        alpha = -(-prev // cur)
        alphas.append(alpha)
        i_series.append(alpha * cur - prev)
        j_series.append(alpha * j_series[-1] - j_series[-2])
    return HJData(tuple(alphas), tuple(i_series), tuple(j_series))


def continued_fraction_value(alphas) -> Fraction:
    """Evaluate [alpha_1, ..., alpha_r] = alpha_1 - 1/(alpha_2 - 1/(...)) exactly."""
    if not alphas:
        raise ValueError("empty continued fraction")
    value = Fraction(alphas[-1])
    for alpha in reversed(alphas[:-1]):
        value = alpha - 1 / value
    return value


def group_from_alphas(alphas) -> GroupParams:
    """Inverse of hj_expand: the group whose expansion is the given chain."""
    if any(alpha < 2 for alpha in alphas):
        raise ValueError(f"every coefficient must be >= 2, got {list(alphas)}")
    value = continued_fraction_value(list(alphas))
    return validate_group(value.numerator, value.denominator)


def multiplicity(h: HJData) -> int:
    return sum(h.alphas) - 2 * (h.r - 1)


def dual_graph(h: HJData) -> DualGraph:
    vertices = tuple(
        DualVertex(u, h.i_series[u], -alpha) for u, alpha in enumerate(h.alphas, start=1)
    )
    edges = tuple((u, u + 1) for u in range(1, h.r))
    return DualGraph(vertices, edges, (1,) * h.r)
