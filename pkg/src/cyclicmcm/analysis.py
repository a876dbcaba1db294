"""Whole-singularity summary, as a plain JSON-ready dict."""

from __future__ import annotations

from . import classify as C
from .hj import GroupParams, dual_graph


def build_document(g: GroupParams) -> dict:
    h = C.expansion(g)
    bounds = C.ulrich_count_bounds(g)
    ehk = C.hilbert_kunz(g)
    return {
        "group": {"n": g.n, "a": g.a},
        "hj": {
            "alphas": list(h.alphas),
            "i_series": list(h.i_series),
            "j_series": list(h.j_series),
        },
        "multiplicity": C.multiplicity(g),
        "special": [
            {"t": m.t, "generators": [list(p) for p in m.generators]}
            for m in sorted(C.special_set(g), key=lambda m: m.t)
        ],
        "ulrich": C.ulrich_set_by_sum(g),
        "per_module": [
            {
                "t": m.t,
                "d": list(m.coefficients),
                "mu": m.mu,
                "is_free": m.is_free,
                "is_special": m.is_special,
                "is_ulrich": m.is_ulrich,
                "tau": m.tau,
                "dual": m.dual,
            }
            for m in C.classify_all(g)
        ],
        "census": [{"m": m, "count": c} for m, c in sorted(C.generator_census(g).items())],
        "ulrich_bounds": {
            "r": bounds.r,
            "lower": bounds.lower,
            "upper": bounds.upper,
            "actual": bounds.actual,
        },
        "hilbert_kunz": {"num": ehk.numerator, "den": ehk.denominator},
    }


def _monomial(i: int, j: int) -> str:
    parts = [f"{v}^{k}" if k > 1 else v for v, k in (("x", i), ("y", j)) if k]
    return "".join(parts) or "1"


def render_text(g: GroupParams, doc: dict) -> str:
    h = C.expansion(g)
    hk = doc["hilbert_kunz"]
    b = doc["ulrich_bounds"]
    lines = [
        f"group        {g}",
        f"alphas       {doc['hj']['alphas']}",
        f"i-series     {doc['hj']['i_series']}",
        f"j-series     {doc['hj']['j_series']}",
        f"dual graph   {dual_graph(h).ascii_chain()}",
        f"e(R)         {doc['multiplicity']}",
        "specials     " + ", ".join(
            f"M_{s['t']} = <" + ", ".join(_monomial(i, j) for i, j in s["generators"]) + ">"
            for s in sorted(doc["special"], key=lambda s: -s["t"])
        ),
        f"ulrich       {doc['ulrich']}",
        f"N_e bounds   {b['lower']} <= {b['actual']} <= {b['upper']}  (r = {b['r']})",
        f"e_HK         {hk['num']}/{hk['den']}",
        "census       " + "  ".join(f"N_{c['m']}={c['count']}" for c in doc["census"]),
        "",
        f"{'t':>6}  {'mu':>3}  {'tau':>6}  {'dual':>6}  flags  d",
    ]
    for row in doc["per_module"]:
        flags = ("F" if row["is_free"] else "-") + ("S" if row["is_special"] else "-") + (
            "U" if row["is_ulrich"] else "-"
        )
        lines.append(
            f"{row['t']:>6}  {row['mu']:>3}  {row['tau']:>6}  {row['dual']:>6}  {flags:<5}  (" + ",".join(map(str, row['d'])) + ")"
        )
    return "\n".join(lines) + "\n"
