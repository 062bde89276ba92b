"""The acceptance suite: ten numbered checks, each cross-validating the
branching dynamic program, the degree formulas, or the stability bound
against hand-verified values or the brute-force oracle.

Checks return CheckResult records with status PASS, FAIL, or SKIP; a SKIP
is only ever produced when a size guard excludes an oracle instance, never
to hide a failure.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .branching import count_zigzag, decompose_perm_module
from .concrete import count_zigzag_concrete
from .degrees import (
    degree_poly,
    gl_order,
    gl_order_poly,
    p_polynomial,
    sum_degree_squares_check,
    vic_hom_count,
)
from .errors import GuardExceeded
from .labels import enumerate_labels, label_of_shape, pad, trivial_label
from .oracle.counts import (
    conjugacy_class_count,
    double_cosets_gl,
    enumerate_group,
    weakstab_cosets,
    weakstab_map_surjective,
)
from .oracle.vic import vic_morphisms
from .stability import (
    check_h_bijection,
    empirical_stability_degree,
    stable_decomposition,
    support_bounds_check,
)

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    status: str
    detail: str

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "name": self.name,
            "status": self.status,
            "detail": self.detail,
        }


def _result(criterion, name, ok, detail=""):
    return CheckResult(criterion, name, PASS if ok else FAIL, detail)


def check_census(quick=False):
    """1: the full character census of the 168-element group at n=3, q=2."""
    labels = enumerate_labels(3, 2)
    degs = sorted(
        deg for shape, c in labels for deg in [degree_poly(shape).evaluate(2)] * c
    )
    shapes_ok = len(labels) == 5
    classes_ok = sum(c for _, c in labels) == 6
    degs_ok = degs == [1, 3, 3, 6, 7, 8]
    sumsq = sum(c * degree_poly(s).evaluate(2) ** 2 for s, c in labels)
    sum_ok = sumsq == gl_order_poly(3).evaluate(2) == 168
    oracle_ok = conjugacy_class_count(3, 2) == 6
    ok = shapes_ok and classes_ok and degs_ok and sum_ok and oracle_ok
    return [
        _result(
            1,
            "census_gl3_f2",
            ok,
            f"shapes=5:{shapes_ok} classes=6:{classes_ok} degrees:{degs_ok} "
            f"sum_sq=168:{sum_ok} oracle_classes:{oracle_ok}",
        )
    ]


def check_degree_census(quick=False):
    """2: sum of class_size * degree^2 equals the group order."""
    instances = [(n, q) for q in (2, 3) for n in range(1, 5)]
    instances += [(n, q) for q in (4, 5) for n in range(1, 4)]
    if quick:
        instances = [(n, q) for n, q in instances if n <= 3]
    bad = [(n, q) for n, q in instances if not sum_degree_squares_check(n, q)]
    return [_result(2, "degree_squares_census", not bad, f"instances={len(instances)} failed={bad}")]


def check_regular_representation(quick=False):
    """3: decomposing k[G_n] recovers every degree as a multiplicity."""
    instances = [(1, 2), (2, 2), (2, 3)] + ([] if quick else [(3, 2)])
    out = []
    for n, q in instances:
        dec = decompose_perm_module(n, n, q)
        mults_ok = all(
            e.multiplicity == e.degree for e in dec.entries
        )
        sumsq_ok = dec.sum_squares() == gl_order(n, q)
        oracle_ok = True
        if (n, q) in ((2, 2), (2, 3), (3, 2)):
            oracle_ok = sum(1 for _ in enumerate_group(n, q)) == dec.sum_squares()
        out.append(
            _result(
                3,
                f"regular_rep_n{n}_q{q}",
                mults_ok and sumsq_ok and oracle_ok,
                f"mult=deg:{mults_ok} sum_sq=|G|:{sumsq_ok} oracle:{oracle_ok}",
            )
        )
    return out


CROSS_INSTANCES = [
    (2, 1, 2),
    (3, 1, 2),
    (4, 1, 2),
    (5, 1, 2),
    (3, 1, 3),
    (4, 1, 3),
    (3, 2, 2),
    (4, 2, 2),
    (5, 2, 2),
    (6, 2, 2),
    (4, 2, 3),
]

# hand computations frozen before the oracle run; both methods agree
EXPECTED_DOUBLE_COSETS = {(3, 1, 2): 7, (3, 1, 3): 15}


def check_cross_validation(quick=False):
    """4: sum of squared multiplicities equals the oracle double-coset count."""
    instances = [t for t in CROSS_INSTANCES if not quick or t[0] <= 4]
    out = []
    for n, m, q in instances:
        name = f"double_cosets_n{n}_m{m}_q{q}"
        dp = decompose_perm_module(n, m, q).sum_squares()
        try:
            oracle = double_cosets_gl(n, m, q)
        except GuardExceeded as exc:
            out.append(CheckResult(4, name, SKIP, f"guard: {exc}"))
            continue
        ok = dp == oracle
        expected = EXPECTED_DOUBLE_COSETS.get((n, m, q))
        if expected is not None:
            ok = ok and dp == expected
        out.append(_result(4, name, ok, f"dp={dp} oracle={oracle} expected={expected}"))
    return out


def check_dimension_identity(quick=False):
    """5: sum of multiplicity * degree * class_size equals |G_n|/|G_{n-m}|."""
    instances = [t for t in CROSS_INSTANCES if not quick or t[0] <= 4]
    instances += [(1, 1, 2), (2, 2, 2), (2, 2, 3), (3, 3, 2)]
    bad = []
    for n, m, q in instances:
        dec = decompose_perm_module(n, m, q)
        if dec.dimension() != gl_order(n, q) // gl_order(n - m, q):
            bad.append((n, m, q))
    dim312 = decompose_perm_module(3, 1, 2).dimension()
    dim313 = decompose_perm_module(3, 1, 3).dimension()
    ok = not bad and dim312 == 28 and dim313 == 234
    return [
        _result(
            5,
            "dimension_identity",
            ok,
            f"instances={len(instances)} failed={bad} dim(3,1,2)={dim312} dim(3,1,3)={dim313}",
        )
    ]


def check_stability(quick=False):
    """6: decompositions constant on [3m, 3m+3] and path counts size-independent."""
    settings = [(m, q) for m in (1, 2, 3) for q in (2, 3)]
    if quick:
        settings = [(1, 2), (1, 3)]
    out = []
    for m, q in settings:
        report = empirical_stability_degree(m, q, 3 * m + 3)
        maps = [report.decompositions[n].stable_map() for n in range(3 * m, 3 * m + 4)]
        constant = all(mp == maps[0] for mp in maps)
        hbij = all(
            check_h_bijection(m, ell, q, label_of_shape(e.shape))
            for e in report.decompositions[3 * m].entries
            for ell in (3 * m, 3 * m + 1)
        )
        out.append(
            _result(
                6,
                f"stability_m{m}_q{q}",
                constant and report.bound_satisfied and hbij,
                f"observed={report.observed_stability_degree} bound=3m={3 * m} "
                f"constant:{constant} h_bijection:{hbij}",
            )
        )
    return out


def check_support_bounds(quick=False):
    """7: every computed decomposition respects the support bounds."""
    instances = [t for t in CROSS_INSTANCES if not quick or t[0] <= 4]
    instances += [(3 * m, m, q) for m in (0, 1, 2, 3) for q in (2, 3)]
    bad = [
        (n, m, q)
        for n, m, q in instances
        if not support_bounds_check(decompose_perm_module(n, m, q))
    ]
    return [_result(7, "support_bounds", not bad, f"instances={len(instances)} failed={bad}")]


def check_dp_vs_concrete(quick=False):
    """8: symmetry-reduced path counting equals plain concrete enumeration."""
    checked, bad = 0, []
    max_n = 4 if quick else 6
    for q in (2, 3):
        for m in (1, 2):
            for n in range(m, max_n + 1):
                dec = decompose_perm_module(n, m, q)
                nu = trivial_label(n - m)
                for e in dec.entries:
                    target = pad(label_of_shape(e.shape), n)
                    fast = count_zigzag(nu, target, m, q)
                    slow = count_zigzag_concrete(nu, target, m, q)
                    checked += 1
                    if fast != slow or fast != e.multiplicity:
                        bad.append((n, m, q, e.shape, fast, slow, e.multiplicity))
    return [_result(8, "dp_vs_concrete", not bad, f"targets={checked} failed={bad}")]


def check_free_module_polynomial(quick=False):
    """9: the point-count polynomial matches direct and oracle enumeration."""
    bad = []
    for q in (2, 3):
        for m in range(4):
            for n in range(m, m + 5):
                if p_polynomial(m, q).evaluate(q**n) != vic_hom_count(m, n, q):
                    bad.append((m, n, q))
    oracle_ok = (
        len(vic_morphisms(1, 2, 2)) == 6
        and len(vic_morphisms(1, 3, 2)) == 28
        and len(vic_morphisms(2, 3, 2)) == 168
    )
    return [
        _result(
            9,
            "free_module_polynomial",
            not bad and oracle_ok,
            f"poly_failures={bad} oracle_counts:{oracle_ok}",
        )
    ]


def check_weak_stability(quick=False):
    """10: double-coset counts stabilize at s = m + min(m, l) and the
    inclusion-induced class map is onto from there on."""
    settings = [(1, 1), (2, 1), (1, 2)]
    if quick:
        settings = [(1, 1), (2, 1)]
    out = []
    for ell, m in settings:
        s = m + min(m, ell)
        counts = [weakstab_cosets(ell, m, r, 2) for r in range(s, s + 3)]
        constant = len(set(counts)) == 1
        surj = []
        skipped = []
        for r in range(s, s + 3):
            try:
                surj.append(weakstab_map_surjective(ell, m, r, 2))
            except GuardExceeded:
                skipped.append(r)
        name = f"weakstab_l{ell}_m{m}"
        detail = f"counts={counts} surjective={surj} guard_skipped_r={skipped}"
        if not constant or not all(surj):
            out.append(CheckResult(10, name, FAIL, detail))
        elif not surj:
            out.append(CheckResult(10, name, SKIP, detail))
        else:
            out.append(CheckResult(10, name, PASS, detail))
    return out


SUITES = {
    "census": [check_census],
    "degrees": [check_degree_census],
    "regular": [check_regular_representation],
    "cross": [check_cross_validation],
    "dimension": [check_dimension_identity],
    "stability": [check_stability],
    "support": [check_support_bounds],
    "concrete": [check_dp_vs_concrete],
    "free-module": [check_free_module_polynomial],
    "weakstab": [check_weak_stability],
}

ALL_CHECKS = [fn for fns in SUITES.values() for fn in fns]


def run_suite(suite=None, quick=False):
    """Run the requested checks; returns the flat list of CheckResults."""
    checks = SUITES[suite] if suite else ALL_CHECKS
    results = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for fn in checks:
            results.extend(fn(quick=quick))
    return results
