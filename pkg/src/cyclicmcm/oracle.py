"""Brute-force monomial oracle.

M_t is spanned by the monomials x^i y^j with i + j*a = t (mod n).  Its
minimal generators are the minimal lattice points of that congruence class,
which this module finds directly.  Nothing here touches the continued
fraction, the i-series or the greedy coefficient vectors; the point is to
check those independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .hj import GroupParams


@dataclass(frozen=True)
class MonomialGeneratorSet:
    t: int
    generators: tuple[tuple[int, int], ...]


def minimal_generators_oracle(g: GroupParams, t: int) -> MonomialGeneratorSet:
    """Staircase records of the sequence (t - j*a) mod n, j = 0, 1, ...

    For each j the smallest admissible i is (t - j*a) mod n; the point is
    minimal exactly when that value beats every earlier column.  The walk
    stops at the record with i = 0, which is reached within n steps.
    """
    n, a = g.n, g.a
    if not 0 <= t <= n - 1:
        raise ValueError(f"module index must lie in [0, {n - 1}], got {t}")
    gens = []
    best = n
    for j in range(n):
        i = (t - j * a) % n
        if i < best:
            gens.append((i, j))
            best = i
            if i == 0:
                break
    return MonomialGeneratorSet(t, tuple(gens))


def minimal_generators_naive(g: GroupParams, t: int) -> MonomialGeneratorSet:
    """Same answer by brute force: all class members in [0, n-1]^2, minus dominated ones."""
    n, a = g.n, g.a
    ii, jj = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    mask = (ii + jj * a - t) % n == 0
    pts = np.stack([ii[mask], jj[mask]], axis=1)
    le = (pts[:, None, :] <= pts[None, :, :]).all(axis=2)
    ne = (pts[:, None, :] != pts[None, :, :]).any(axis=2)
    # q dominates p when q <= p componentwise and q != p
    dominated = (le & ne).any(axis=0)
    keep = pts[~dominated]
    gens = sorted(((int(i), int(j)) for i, j in keep), key=lambda p: p[1])
    return MonomialGeneratorSet(t, tuple(gens))


def mu_oracle(g: GroupParams, t: int) -> int:
    return len(minimal_generators_oracle(g, t).generators)


def mu_oracle_table(g: GroupParams) -> list[int]:
    """mu_oracle for every t at once (vectorised staircase)."""
    n, a = g.n, g.a
    t = np.arange(n, dtype=np.int64)[:, None]
    j = np.arange(n, dtype=np.int64)[None, :]
    vals = (t - j * a) % n
    running = np.minimum.accumulate(vals, axis=1)
    records = (vals[:, 1:] < running[:, :-1]).sum(axis=1) + 1
    return [int(x) for x in records]


def multiplicity_oracle(g: GroupParams) -> int:
    return max(mu_oracle_table(g))


def ulrich_set_oracle(g: GroupParams) -> list[int]:
    table = mu_oracle_table(g)
    top = max(table)
    return [t for t, m in enumerate(table) if m == top]


@dataclass
class CheckReport:
    n: int
    a: int
    r: int = 0
    e: int = 0
    n_ulrich: int = 0
    upper_bound_hit: bool = False
    lower_bound_hit: bool = False
    ehk_num: int = 0
    ehk_den: int = 1
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def csv_row(self) -> list:
        return [
            self.n, self.a, self.r, self.e, self.n_ulrich,
            int(self.upper_bound_hit), int(self.lower_bound_hit),
            self.ehk_num, self.ehk_den, int(self.passed),
        ]


CSV_HEADER = [
    "n", "a", "r", "e", "N_ulrich", "upper_bound_hit", "lower_bound_hit",
    "ehk_num", "ehk_den", "pass",
]


def _alternates(signs) -> bool:
    nonzero = [s for s in signs if s != 0]
    if not nonzero or len(nonzero) % 2:
        return False
    return all(s == (-1 if k % 2 == 0 else 1) for k, s in enumerate(nonzero))


def cross_check(g: GroupParams) -> CheckReport:
    """Compare the combinatorial classification against the oracle.

    Mismatches are collected in the report rather than raised.
    """
    from . import classify as C

    n, a = g.n, g.a
    rep = CheckReport(n, a)
    h = C.expansion(g)
    e = C.multiplicity(g)
    rep.r, rep.e = h.r, e

    oracle_mu = mu_oracle_table(g)
    coeffs = C.coefficient_table(g)
    mus = C.mu_table(g)
    for t, (m, mo) in enumerate(zip(mus, oracle_mu)):
        rep.expect(m == mo, f"mu(M_{t}) = {m} but oracle gives {mo}")
        rep.expect(1 <= m <= e, f"mu(M_{t}) = {m} outside [1, {e}]")
        rep.expect((m == 1) == (t == 0), f"mu(M_{t}) = 1 only for the free module")

    for s in range(1, h.r + 1):
        i_s, j_s = h.i_series[s], h.j_series[s]
        gens = set(minimal_generators_oracle(g, i_s).generators)
        rep.expect(gens == {(i_s, 0), (0, j_s)},
                   f"special M_{i_s}: oracle generators {sorted(gens)} != {{({i_s},0),(0,{j_s})}}")
        rep.expect(mus[i_s] == 2, f"special M_{i_s} has mu {mus[i_s]}")
        for img, what in ((C.dual(g, i_s), "dual"), (C.tau(g, i_s), "tau")):
            rep.expect(mus[img] == e, f"{what}(M_{i_s}) = M_{img} is not Ulrich")

    e_oracle = max(oracle_mu)
    rep.expect(e_oracle == e, f"multiplicity {e} but oracle gives {e_oracle}")

    by_sum = C.ulrich_set_by_sum(g)
    by_oracle = [t for t, m in enumerate(oracle_mu) if m == e_oracle]
    try:
        by_chains = C.ulrich_set_by_chains(g)
    except AssertionError as exc:
        by_chains = None
        rep.expect(False, str(exc))
    rep.expect(by_sum == by_oracle, f"Ulrich set by sum {by_sum} != oracle {by_oracle}")
    if by_chains is not None:
        rep.expect(by_sum == by_chains, f"Ulrich set by sum {by_sum} != by chains {by_chains}")

    seqs = C.enumerate_valid_sequences(h)
    values = [C.recompose(h, d) for d in seqs]
    rep.expect(len(seqs) == n and sorted(values) == list(range(n)),
               f"{len(seqs)} admissible sequences do not biject onto [0, {n - 1}]")
    rep.expect(all(0 <= t < n and coeffs[t] == d for d, t in zip(seqs, values)),
               "decompose does not invert recompose")

    rep.expect(all(n - a <= t <= n - 1 for t in by_sum), f"Ulrich index outside [{n - a}, {n - 1}]")
    rep.expect(mus[n - 1] == e and mus[n - a] == e, f"M_{n - 1} and M_{n - a} must be Ulrich")

    top = coeffs[n - 1]
    for t in by_sum:
        if t == n - 1:
            continue
        eps = tuple(x - y for x, y in zip(coeffs[t], top))
        ok = eps[0] in (-1, 0) and all(x in (-1, 0, 1) for x in eps[1:]) and _alternates(eps)
        rep.expect(ok, f"epsilon signature of M_{t} is {eps}")

    census = C.generator_census(g)
    rep.expect(sum(census.values()) == n, "census does not sum to n")
    rep.expect(all(v >= 1 for v in census.values()), f"some N_m is zero: {census}")

    bounds = C.ulrich_count_bounds(g)
    rep.n_ulrich = bounds.actual
    rep.upper_bound_hit, rep.lower_bound_hit = bounds.at_upper, bounds.at_lower
    inner = h.alphas[1:-1]
    rep.expect(bounds.r <= bounds.actual <= min(bounds.upper, a),
               f"N_e = {bounds.actual} outside [{bounds.r}, min({bounds.upper}, {a})]")
    rep.expect(bounds.at_upper == all(x > 2 for x in inner), "upper-bound equality condition fails")
    rep.expect(bounds.at_lower == all(x == 2 for x in inner), "lower-bound equality condition fails")

    special = {0, *h.specials}
    ulrich = set(by_sum)
    if e == 2:
        rep.expect(all(t in special and t in ulrich for t in range(1, n)), "e = 2 but not all special and Ulrich")
    elif e == 3:
        rep.expect(not (special & ulrich) and (special | ulrich) == set(range(n)),
                   "e = 3 but specials and Ulrichs do not partition")
    else:
        rep.expect(bool(set(range(n)) - special - ulrich), "e > 3 but every module is special or Ulrich")

    ehk = C.hilbert_kunz(g)
    rep.ehk_num, rep.ehk_den = ehk.numerator, ehk.denominator
    rep.expect(ehk * n == sum(oracle_mu), "Hilbert-Kunz numerator disagrees with oracle")
    return rep
