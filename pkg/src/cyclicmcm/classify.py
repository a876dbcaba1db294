"""Classification of the indecomposable MCM modules M_0, ..., M_{n-1}.

Every index t has a unique greedy expansion t = d_1 i_1 + ... + d_r i_r over
the i-series, and M_t needs exactly d_1 + ... + d_r + 1 generators.  Ulrich
modules are the ones reaching the multiplicity e(R); the special ones are
R and M_{i_1}, ..., M_{i_r}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .hj import GroupParams, HJData, hj_expand, multiplicity as _multiplicity


class InvalidSequence(ValueError):
    """Coefficient vector violating the admissibility conditions."""


class NotApplicable(ValueError):
    pass


class RangeViolation(AssertionError):
    """An Ulrich index outside [n-a, n-1]; means an internal bug."""


@lru_cache(maxsize=4096)
def expansion(g: GroupParams) -> HJData:
    return hj_expand(g)


def multiplicity(g: GroupParams) -> int:
    return _multiplicity(expansion(g))


@dataclass(frozen=True)
class ModuleReport:
    t: int
    coefficients: tuple[int, ...]
    mu: int
    is_special: bool
    is_ulrich: bool
    generators: tuple[tuple[int, int], ...] | None
    tau: int
    dual: int

    @property
    def is_free(self) -> bool:
        return self.t == 0


@dataclass(frozen=True)
class RangeCheck:
    lo: int
    hi: int
    witnesses: tuple[int, int]


@dataclass(frozen=True)
class UlrichBounds:
    r: int
    lower: int
    upper: int
    actual: int
    at_upper: bool
    at_lower: bool


def _check_index(g: GroupParams, t: int) -> None:
    if not 0 <= t <= g.n - 1:
        raise ValueError(f"module index must lie in [0, {g.n - 1}], got {t}")


# -- coefficient vectors -----------------------------------------------------

def _greedy(specials: tuple[int, ...], t: int) -> tuple[int, ...]:
    d = [0] * len(specials)
    rest = t
    for u, i in enumerate(specials):
        if rest == 0:
            break
        d[u], rest = divmod(rest, i)
    return tuple(d)


@lru_cache(maxsize=256)
def coefficient_table(g: GroupParams) -> tuple[tuple[int, ...], ...]:
    specials = expansion(g).specials
    return tuple(_greedy(specials, t) for t in range(g.n))


@lru_cache(maxsize=256)
def mu_table(g: GroupParams) -> tuple[int, ...]:
    return tuple(sum(d) + 1 for d in coefficient_table(g))


def decompose(g: GroupParams, t: int) -> tuple[int, ...]:
    """Greedy division of t by i_1 > i_2 > ... > i_r = 1."""
    _check_index(g, t)
    return coefficient_table(g)[t]


def is_valid_sequence(h: HJData, d) -> bool:
    if len(d) != h.r:
        raise ValueError(f"expected {h.r} coefficients, got {len(d)}")
    open_max = False
    for du, alpha in zip(d, h.alphas):
        if not 0 <= du <= alpha - 1:
            return False
        if du == alpha - 1:
            # two maxima need some d_w <= alpha_w - 3 strictly between them
            if open_max:
                return False
            open_max = True
        elif du <= alpha - 3:
            open_max = False
    return True


def recompose(h: HJData, d) -> int:
    if not is_valid_sequence(h, d):
        raise InvalidSequence(f"{tuple(d)} is not admissible for alphas {list(h.alphas)}")
    return sum(du * i for du, i in zip(d, h.specials))


def enumerate_valid_sequences(h: HJData) -> list[tuple[int, ...]]:
    """All admissible coefficient vectors, in lexicographic order.

    Depth-first with pruning on the admissibility state, so the work is
    proportional to the number of valid prefixes (never the full box).
    """
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []
    alphas = h.alphas
    r = h.r

    def extend(u: int, open_max: bool) -> None:
        if u == r:
            out.append(tuple(prefix))
            return
        alpha = alphas[u]
        for du in range(alpha):
            if du == alpha - 1:
                if open_max:
                    continue
                state = True
            elif du <= alpha - 3:
                state = False
            else:
                state = open_max
            prefix.append(du)
            extend(u + 1, state)
            prefix.pop()

    extend(0, False)
    return out


# -- generators and Ulrich status ---------------------------------------------

def mu(g: GroupParams, t: int) -> int:
    _check_index(g, t)
    return mu_table(g)[t]


def is_ulrich(g: GroupParams, t: int) -> bool:
    return mu(g, t) == multiplicity(g)


def ulrich_set_by_sum(g: GroupParams) -> list[int]:
    e = multiplicity(g)
    return [t for t, m in enumerate(mu_table(g)) if m == e]


def tau(g: GroupParams, t: int) -> int:
    _check_index(g, t)
    return (t - g.a - 1) % g.n


def dual(g: GroupParams, t: int) -> int:
    _check_index(g, t)
    return (g.n - t) % g.n


def special_generators(g: GroupParams, t: int) -> tuple[tuple[int, int], ...] | None:
    """Exponents of the minimal generators x^{i_s}, y^{j_s} of a special M_t."""
    if t == 0:
        return ((0, 0),)
    return _special_map(g).get(t)


@lru_cache(maxsize=256)
def _special_map(g: GroupParams) -> dict[int, tuple[tuple[int, int], ...]]:
    h = expansion(g)
    return {h.i_series[s]: ((h.i_series[s], 0), (0, h.j_series[s])) for s in range(1, h.r + 1)}


def module_report(g: GroupParams, t: int) -> ModuleReport:
    d = decompose(g, t)
    m = mu_table(g)[t]
    gens = special_generators(g, t)
    return ModuleReport(
        t=t,
        coefficients=d,
        mu=m,
        is_special=gens is not None,
        is_ulrich=m == multiplicity(g),
        generators=gens,
        tau=tau(g, t),
        dual=dual(g, t),
    )


def classify_all(g: GroupParams) -> list[ModuleReport]:
    return [module_report(g, t) for t in range(g.n)]


def special_set(g: GroupParams) -> list[ModuleReport]:
    """Reports for the non-free specials i_1 > ... > i_r (R itself excluded)."""
    return [module_report(g, i) for i in expansion(g).specials]


def support_set(g: GroupParams, t: int) -> set[int]:
    h = expansion(g)
    return {i for i, du in zip(h.specials, decompose(g, t)) if du != 0}


# -- pair chains --------------------------------------------------------------

def _support_positions(g: GroupParams) -> list[int]:
    """1-based positions s with i_s in the support of n - 1."""
    d = decompose(g, g.n - 1)
    return [s for s, du in enumerate(d, start=1) if du != 0]


def pair_set_U(g: GroupParams) -> list[tuple[int, int]]:
    """Pairs (i_s, i_u), s < u, with i_s in the support of n - 1.

    Ordered by decreasing first element, then decreasing second element.
    """
    h = expansion(g)
    i = h.i_series
    return [(i[s], i[u]) for s in _support_positions(g) for u in range(s + 1, h.r + 1)]


def ulrich_chains(g: GroupParams) -> list[tuple[tuple[tuple[int, int], ...], int]]:
    """Every interleaved chain over U together with the index it produces.

    A chain (p_1, ..., p_b) needs second(p_c) > first(p_{c+1}).  The empty
    chain stands for n - 1.  Raises if two chains hit the same index, which
    would contradict uniqueness of the coefficient vectors.
    """
    h = expansion(g)
    i = h.i_series
    pairs = [(s, u) for s in _support_positions(g) for u in range(s + 1, h.r + 1)]
    top = g.n - 1
    found: list[tuple[tuple[tuple[int, int], ...], int]] = [((), top)]
    seen = {top}
    chain: list[tuple[int, int]] = []

    def extend(last_u: int, t: int) -> None:
        for s, u in pairs:
            # i-values decrease with position, so i_{u'} > i_s means s > u'
            if s <= last_u:
                continue
            nxt = t - (i[s] - i[u])
            chain.append((s, u))
            if nxt in seen:
                raise AssertionError(f"two chains give the same index {nxt} for {g}")
            seen.add(nxt)
            found.append((tuple((i[p], i[q]) for p, q in chain), nxt))
            extend(u, nxt)
            chain.pop()

    extend(0, top)
    return found


def ulrich_set_by_chains(g: GroupParams) -> list[int]:
    return sorted(t for _, t in ulrich_chains(g))


def ulrich_range_check(g: GroupParams) -> RangeCheck:
    lo, hi = g.n - g.a, g.n - 1
    ulrich = ulrich_set_by_sum(g)
    outside = [t for t in ulrich if not lo <= t <= hi]
    if outside:
        raise RangeViolation(f"Ulrich indices {outside} outside [{lo}, {hi}] for {g}")
    for t in (lo, hi):
        if not is_ulrich(g, t):
            raise RangeViolation(f"M_{t} should be Ulrich for {g}")
    return RangeCheck(lo, hi, (lo, hi))


def epsilon_signature(g: GroupParams, t: int) -> tuple[int, ...]:
    """Difference between the coefficient vectors of M_t and M_{n-1}.

    Only defined for Ulrich t other than n - 1.
    """
    if t == g.n - 1 or not is_ulrich(g, t):
        raise NotApplicable(f"M_{t} is not an Ulrich module other than M_{g.n - 1}")
    top = decompose(g, g.n - 1)
    return tuple(du - dv for du, dv in zip(decompose(g, t), top))


# -- counting -----------------------------------------------------------------

def generator_census(g: GroupParams) -> dict[int, int]:
    counts = Counter(mu_table(g))
    return {m: counts.get(m, 0) for m in range(1, multiplicity(g) + 1)}


def ulrich_count_bounds(g: GroupParams) -> UlrichBounds:
    r = expansion(g).r
    actual = len(ulrich_set_by_sum(g))
    lower, upper = r, 2 ** (r - 1)
    return UlrichBounds(r, lower, upper, actual, actual == upper, actual == lower)


def hilbert_kunz(g: GroupParams) -> Fraction:
    """Average number of generators over M_0, ..., M_{n-1}, exactly."""
    return Fraction(sum(mu_table(g)), g.n)
