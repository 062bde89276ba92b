"""Multiplicity stability: stable decompositions, empirical onset, and the
consecutive-size path-count equality behind the 3m bound."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .branching import Decomposition, count_zigzag, decompose_perm_module
from .errors import BadParameters
from .labels import IOTA, Label, pad, trivial_label


def stable_decomposition(m: int, q: int) -> Decomposition:
    """The decomposition at n = 3m, valid unchanged for all n >= 3m."""
    return decompose_perm_module(3 * m, m, q)


@dataclass
class StabilityReport:
    m: int
    q: int
    n_max: int
    decompositions: dict = field(repr=False)  # n -> Decomposition
    observed_stability_degree: int = 0
    bound_satisfied: bool = True

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "q": self.q,
            "n_max": self.n_max,
            "observed_stability_degree": self.observed_stability_degree,
            "bound": 3 * self.m,
            "bound_satisfied": self.bound_satisfied,
            "decompositions": {
                str(n): dec.to_json() for n, dec in sorted(self.decompositions.items())
            },
        }


def empirical_stability_degree(m: int, q: int, n_max: int, workers=None) -> StabilityReport:
    """Decompose for every n in [m, n_max] and locate the onset of constancy."""
    if n_max < 3 * m:
        raise BadParameters(f"n_max={n_max} must be >= 3m={3 * m}")
    sizes = list(range(m, n_max + 1))
    if workers and workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            decs = list(pool.map(lambda n: decompose_perm_module(n, m, q), sizes))
    else:
        decs = [decompose_perm_module(n, m, q) for n in sizes]
    by_n = dict(zip(sizes, decs))
    final_map = by_n[n_max].stable_map()
    observed = n_max
    for n in reversed(sizes):
        if by_n[n].stable_map() != final_map:
            break
        observed = n
    report = StabilityReport(
        m=m,
        q=q,
        n_max=n_max,
        decompositions=by_n,
        observed_stability_degree=observed,
        bound_satisfied=observed <= 3 * m,
    )
    return report


def check_h_bijection(m: int, ell: int, q: int, lam: Label, strict: bool = True) -> bool:
    """Path-count equality between consecutive sizes ell and ell + 1.

    Guaranteed to hold for ell >= 3m; below the threshold the comparison is
    still computed, with a warning, unless strict.
    """
    if ell < 3 * m:
        if strict:
            raise BadParameters(f"ell={ell} below stability threshold {3 * m}")
        warnings.warn(f"ell={ell} below stability threshold {3 * m}; equality not guaranteed")
    lhs = count_zigzag(trivial_label(ell - m), pad(lam, ell), m, q)
    rhs = count_zigzag(trivial_label(ell + 1 - m), pad(lam, ell + 1), m, q)
    return lhs == rhs


def support_bounds_check(dec: Decomposition) -> bool:
    """Every stable shape satisfies norm <= 2m and first iota row <= m."""
    for e in dec.entries:
        if e.shape.norm() > 2 * dec.m:
            return False
        if e.shape.iota and e.shape.iota[0] > dec.m:
            return False
    return True


def first_row_margin_holds(nu: Label, mu: Label, m: int, q: int) -> bool:
    """Instrumented check: along every state reachable from nu, the iota
    partition keeps first row at least one more than the second."""
    from .branching import zigzag_distribution, _pin_anonymous
    from .labels import canonical

    trace = []
    nu_p, mu_p = _pin_anonymous(nu), _pin_anonymous(mu)
    context = tuple(
        k
        for lab in (nu_p, mu_p)
        for k in lab.support()
        if k[0] == "named"
    )
    zigzag_distribution(nu_p, m, q, tuple(set(context)), target=canonical(mu_p), trace=trace)
    for _phase, states in trace:
        for state in states:
            rows = state.get(IOTA)
            first = rows[0] if rows else 0
            second = rows[1] if len(rows) > 1 else 0
            if first - 1 < second:
                return False
    return True
