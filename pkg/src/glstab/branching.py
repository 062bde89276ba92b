"""Zigzag-path counting and decomposition of the permutation modules.

The multiplicity of an irreducible in k[G_n/G_{n-m}] equals the number of
alternating remove/add walks of label functions from the trivial label of
G_{n-m} up to the target label.  Counting is done by a forward dynamic
program over canonical states: anonymous same-degree cuspidals are kept as
an unordered multiset, and a transition that activates fresh anonymous
cuspidals is weighted by the number of ways to draw distinct concrete
cuspidals from the pool at field size q.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from . import partitions as pt
from .degrees import cuspidal_count, degree_poly, gl_order, prime_power
from .errors import BadParameters, SizeMismatch
from .labels import (
    IOTA,
    Label,
    Shape,
    anon_key,
    canonical,
    class_size,
    key_degree,
    named_key,
    shape_of,
    stabilize,
    trivial_label,
)


@lru_cache(maxsize=None)
def _dset(rows):
    return tuple(pt.down_set(rows))


@lru_cache(maxsize=None)
def _uset(rows, target_size):
    return tuple(pt.up_set(rows, target_size))


def _falling(a, k):
    return prod(range(a, a - k, -1)) if 0 <= k <= a else 0


@lru_cache(maxsize=None)
def _column_multisets(budget):
    """Multisets of (degree, height) with sum degree*height = budget, height >= 1."""
    if budget == 0:
        return ((),)
    items = []
    for d in range(1, budget + 1):
        for k in range(1, budget // d + 1):
            items.append((d, k))
    items.sort(reverse=True)
    out = []

    def rec(remaining, start, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for idx in range(start, len(items)):
            d, k = items[idx]
            if d * k > remaining:
                continue
            acc.append((d, k))
            rec(remaining - d * k, idx, acc)
            acc.pop()

    rec(budget, 0, [])
    return tuple(out)


class _Ctx:
    """Per-invocation transition tables for one (q, pinned support) setting."""

    def __init__(self, q, named_context=()):
        self.q = q
        self.named_context = tuple(sorted(named_context))
        self.named_by_degree = Counter(key_degree(k) for k in self.named_context)
        self._down_memo = {}
        self._up_memo = {}

    def down(self, state: Label):
        """Canonical successors of one remove-at-most-one-box-per-row step."""
        hit = self._down_memo.get(state)
        if hit is not None:
            return hit
        keys = [k for k, _ in state.entries]
        out = defaultdict(int)

        def rec(idx, acc):
            if idx == len(keys):
                out[canonical(Label(list(acc.items())))] += 1
                return
            key = keys[idx]
            for rows in _dset(state.get(key)):
                if rows:
                    acc[key] = rows
                    rec(idx + 1, acc)
                    del acc[key]
                else:
                    rec(idx + 1, acc)

        rec(0, {})
        out = dict(out)
        self._down_memo[state] = out
        return out

    def _avail(self, degree, active_anon):
        pool = cuspidal_count(degree, self.q)
        return (
            pool
            - (1 if degree == 1 else 0)
            - self.named_by_degree.get(degree, 0)
            - active_anon.get(degree, 0)
        )

    def up(self, state: Label, target_norm: int):
        """Canonical successors of one add-at-most-one-box-per-row step.

        Weights count concrete successors of one concrete representative:
        fresh anonymous activations of f_d distinct degree-d cuspidals
        contribute falling(avail_d, f_d) divided by the multiplicities of
        equal fresh columns.
        """
        memo_key = (state, target_norm)
        hit = self._up_memo.get(memo_key)
        if hit is not None:
            return hit
        budget = target_norm - state.norm()
        out = defaultdict(int)
        if budget < 0:
            self._up_memo[memo_key] = {}
            return {}
        keys = [IOTA, *self.named_context]
        keys += [k for k, _ in state.entries if k[0] == "anon"]
        active_anon = Counter(
            key_degree(k) for k, _ in state.entries if k[0] == "anon"
        )
        next_slot = len([k for k, _ in state.entries if k[0] == "anon"])

        def fresh_weight(cols):
            per_degree = Counter(d for d, _k in cols)
            weight = 1
            for d, f in per_degree.items():
                weight *= _falling(self._avail(d, active_anon), f)
                if weight == 0:
                    return 0
            for dk, mult in Counter(cols).items():
                weight //= factorial(mult)
            return weight

        def rec(idx, remaining, acc):
            if idx == len(keys):
                for cols in _column_multisets(remaining):
                    w = fresh_weight(cols)
                    if w == 0:
                        continue
                    items = dict(acc)
                    for j, (d, k) in enumerate(cols):
                        items[anon_key(d, next_slot + j)] = (1,) * k
                    out[canonical(Label(items))] += w
                return
            key = keys[idx]
            d = key_degree(key)
            rows = state.get(key)
            base = sum(rows)
            for b in range(remaining // d + 1):
                for new_rows in _uset(rows, base + b):
                    if new_rows:
                        acc[key] = new_rows
                        rec(idx + 1, remaining - d * b, acc)
                        del acc[key]
                    else:
                        rec(idx + 1, remaining - d * b, acc)

        rec(0, budget, {})
        out = dict(out)
        self._up_memo[memo_key] = out
        return out


def _rows_close(a, b, r):
    return all(
        abs(pt.row(a, i) - pt.row(b, i)) <= r for i in range(max(len(a), len(b)))
    )


def _can_reach(state: Label, target: Label, r: int) -> bool:
    """Cheap necessary condition for reaching target in r down/up pairs."""
    keys = set(state.support()) | set(target.support()) | {IOTA}
    for key in keys:
        srows, trows = state.get(key), target.get(key)
        if key[0] == "anon":
            # anonymous parts must shrink to nothing: row 1 loses <=1 per pair
            if pt.row(srows, 0) > r:
                return False
        elif not _rows_close(srows, trows, r):
            return False
    return True


def _pin_anonymous(label: Label) -> Label:
    """Give anonymous keys a concrete named identity (to fix an endpoint)."""
    items = []
    for key, rows in label.entries:
        if key[0] == "anon":
            items.append((named_key(key[1], f"pin{key[2]}"), rows))
        else:
            items.append((key, rows))
    return Label(items)


def zigzag_distribution(start: Label, m: int, q: int, named_context=(), target=None, trace=None):
    """Path-count weights over canonical states after m down/up pairs."""
    ctx = _Ctx(q, named_context)
    states = {canonical(start): 1}
    n0 = start.norm()
    for s in range(1, m + 1):
        after_down = defaultdict(int)
        for st, w in states.items():
            for succ, c in ctx.down(st).items():
                after_down[succ] += w * c
        if trace is not None:
            trace.append(("down", dict(after_down)))
        new_states = defaultdict(int)
        for st, w in after_down.items():
            for succ, c in ctx.up(st, n0 + s).items():
                new_states[succ] += w * c
        if target is not None:
            r = m - s
            new_states = {
                st: w for st, w in new_states.items() if _can_reach(st, target, r)
            }
        if trace is not None:
            trace.append(("up", dict(new_states)))
        states = dict(new_states)
    return states


def count_zigzag(nu: Label, mu: Label, m: int, q: int) -> int:
    """Number of zigzag paths from nu up to mu in m steps over the pool at q.

    Equals the multiplicity of the irreducible labelled nu in the
    restriction of the one labelled mu.
    """
    prime_power(q)
    if m < 0:
        raise SizeMismatch(f"step count must be non-negative, got {m}")
    if mu.norm() - nu.norm() != m:
        raise SizeMismatch(
            f"norm difference {mu.norm() - nu.norm()} != step count {m}"
        )
    nu_p, mu_p = _pin_anonymous(nu), _pin_anonymous(mu)
    if m == 0:
        return 1 if nu_p == mu_p else 0
    context = {k for k in nu_p.support() if k[0] == "named"}
    context |= {k for k in mu_p.support() if k[0] == "named"}
    target = canonical(mu_p)
    dist = zigzag_distribution(nu_p, m, q, tuple(context), target=target)
    return dist.get(target, 0)


@dataclass(frozen=True)
class DecompositionEntry:
    shape: Shape  # stable shape: iota holds the tail below the padded row
    multiplicity: int
    class_size: int
    degree: int  # dimension of one irreducible in the class, at this (n, q)


@dataclass(frozen=True)
class Decomposition:
    n: int
    m: int
    q: int
    entries: tuple

    def sum_squares(self) -> int:
        return sum(e.multiplicity**2 * e.class_size for e in self.entries)

    def dimension(self) -> int:
        return sum(e.multiplicity * e.degree * e.class_size for e in self.entries)

    def stable_map(self) -> dict:
        """Shape -> (multiplicity, class size); the stable-coordinate view."""
        return {e.shape: (e.multiplicity, e.class_size) for e in self.entries}

    def to_json(self) -> dict:
        from .labels import shape_to_json

        return {
            "n": self.n,
            "m": self.m,
            "q": self.q,
            "entries": [
                {
                    "shape": shape_to_json(e.shape),
                    "mult": e.multiplicity,
                    "class_size": e.class_size,
                    "degree": str(e.degree),
                }
                for e in self.entries
            ],
            "checks": {
                "sum_sq": self.sum_squares(),
                "dim": str(self.dimension()),
            },
        }


def decompose_perm_module(n: int, m: int, q: int) -> Decomposition:
    """Irreducible decomposition of k[G_n/G_{n-m}], in stable coordinates."""
    prime_power(q)
    if not 0 <= m <= n:
        raise BadParameters(f"need 0 <= m <= n, got n={n}, m={m}")
    dist = zigzag_distribution(trivial_label(n - m), m, q)
    entries = []
    for state, weight in dist.items():
        stable, _ = stabilize(state)
        stable_shape = shape_of(stable)
        cls = class_size(stable_shape, q)
        assert cls > 0 and weight % cls == 0
        entries.append(
            DecompositionEntry(
                shape=stable_shape,
                multiplicity=weight // cls,
                class_size=cls,
                degree=degree_poly(shape_of(state)).evaluate(q),
            )
        )
    entries.sort(key=lambda e: e.shape.sort_key())
    dec = Decomposition(n=n, m=m, q=q, entries=tuple(entries))
    assert dec.stable_map()[Shape()][0] == 1  # trivial constituent exactly once
    assert dec.dimension() == gl_order(n, q) // gl_order(n - m, q)
    return dec


@dataclass(frozen=True)
class RestrictEntry:
    label: Label  # canonical class representative at norm ||mu|| - 1
    multiplicity: int  # of one concrete member, in the restriction
    class_count: int  # concrete members of the class, given mu's support


def restrict_step(mu: Label, q: int) -> list:
    """One-step restriction multiplicities, grouped into classes.

    Classes are taken relative to the support of mu: cuspidals appearing in
    mu stay pinned, anonymous entries in the result range over the unused
    part of the pool (a fresh column is legal because the intermediate label
    must vanish there).
    """
    prime_power(q)
    if mu.norm() < 1:
        raise BadParameters("norm of mu must be >= 1")
    mu_p = canonical(_pin_anonymous(mu))
    context = tuple(k for k in mu_p.support() if k[0] == "named")
    ctx = _Ctx(q, context)
    weights = defaultdict(int)
    for lam, c_down in ctx.down(mu_p).items():
        for nu_state, c_up in ctx.up(lam, mu_p.norm() - 1).items():
            weights[nu_state] += c_down * c_up
    out = []
    for nu_state, w in sorted(weights.items(), key=lambda kv: kv[0].entries):
        by_degree = Counter(
            key_degree(k) for k, _ in nu_state.entries if k[0] == "anon"
        )
        cnt = 1
        for d, k in by_degree.items():
            avail = cuspidal_count(d, q) - (1 if d == 1 else 0) - sum(
                1 for key in context if key_degree(key) == d
            )
            parts = [r for key, r in nu_state.entries if key[0] == "anon" and key_degree(key) == d]
            ways = _falling(avail, k)
            denom = prod(factorial(parts.count(rows)) for rows in set(parts))
            assert ways % denom == 0
            cnt *= ways // denom
        assert cnt > 0 and w % cnt == 0
        out.append(RestrictEntry(label=nu_state, multiplicity=w // cnt, class_count=cnt))
    return out
