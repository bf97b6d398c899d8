"""Cross-checks of closed formulas against brute-force oracles.

Each suite returns a list of :class:`Check` results; the CLI prints one line
per check. Progress goes to the ``progress`` callback (stderr in the CLI).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from . import classifier as clf
from .coxeter import CapExceeded, generate_group, poincare_bruteforce, realize, sylow_is_cyclic
from .dimseq import complexity_upper_bound, kunneth_convolve
from .f2forms import build_form, direct_sum, isometry_group_order, witt_index, zero_count
from .polyring import degree_count_multiplicity, phi_multiplicity
from .weyl import IrreducibleType, WeylSpec, degrees, group_order, poincare_polynomial

__all__ = ["Check", "SUITES", "run_suite", "enumerable_types", "irreducible_types_up_to_rank"]

PRIMES_TO_13 = (2, 3, 5, 7, 11, 13)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.name}" + (f": {self.detail}" if self.detail else "")


def _quiet(msg: str) -> None:
    pass


def enumerable_types(include_e7: bool = False, weyl_only: bool = False) -> list[IrreducibleType]:
    """The irreducible types whose groups are enumerated by brute force."""
    out = [IrreducibleType("A", n) for n in range(1, 10)]
    out += [IrreducibleType("B", n) for n in range(2, 8)]
    out += [IrreducibleType("D", n) for n in range(2, 9)]
    out += [IrreducibleType("G", 2), IrreducibleType("F", 4), IrreducibleType("E", 6)]
    if include_e7:
        out.append(IrreducibleType("E", 7))
    if not weyl_only:
        out += [IrreducibleType("I2", 2, m) for m in range(3, 61)]
    return out


def irreducible_types_up_to_rank(max_rank: int, max_m: int = 60) -> list[IrreducibleType]:
    out = [IrreducibleType("A", n) for n in range(1, max_rank + 1)]
    out += [IrreducibleType("B", n) for n in range(2, max_rank + 1)]
    out += [IrreducibleType("D", n) for n in range(2, max_rank + 1)]
    out += [IrreducibleType("E", n) for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        out.append(IrreducibleType("F", 4))
    if max_rank >= 2:
        out.append(IrreducibleType("G", 2))
        out += [IrreducibleType("I2", 2, m) for m in range(3, max_m + 1)]
    return out


def _within(types, max_order):
    return [t for t in types if max_order is None or group_order(t) <= max_order]


def poincare_oracle(max_order=None, include_e7=False, progress=_quiet, **_) -> list[Check]:
    checks = []
    for t in _within(enumerable_types(include_e7), max_order):
        progress(f"poincare-oracle: enumerating {t}")
        try:
            g = generate_group(realize(t), element_cap=max(group_order(t), 1))
        except CapExceeded as exc:
            checks.append(Check(f"poincare {t}", False, str(exc)))
            continue
        brute = poincare_bruteforce(g)
        formula = poincare_polynomial(t)
        ok = brute == formula and g.order == group_order(t)
        detail = f"|W|={g.order}" if ok else f"BFS {brute} vs degrees {formula}"
        checks.append(Check(f"poincare {t}", ok, detail))
    return checks


def multiplicity_oracle(max_rank=12, max_e=40, progress=_quiet, **_) -> list[Check]:
    checks = []
    for t in irreducible_types_up_to_rank(max_rank):
        p = poincare_polynomial(t)
        bad = [
            e for e in range(2, max_e + 1)
            if degree_count_multiplicity(degrees(t), e) != phi_multiplicity(p, e)
        ]
        checks.append(Check(f"multiplicity {t}", not bad, f"mismatch at e={bad}" if bad else f"e=2..{max_e}"))
    progress(f"multiplicity-oracle: {len(checks)} types")
    return checks


def sylow_oracle(max_order=None, include_e7=False, progress=_quiet, **_) -> list[Check]:
    checks = []
    for t in _within(enumerable_types(include_e7, weyl_only=True), max_order):
        progress(f"sylow-oracle: enumerating {t}")
        g = generate_group(realize(t), element_cap=group_order(t))
        bad = []
        for l in PRIMES_TO_13:
            cyclic, _ = sylow_is_cyclic(g, l)
            if cyclic != (g.order % (l * l) != 0):
                bad.append(l)
        checks.append(Check(f"sylow {t}", not bad, f"disagrees at l={bad}" if bad else "l=2..13"))
        if str(t) == "F4":
            cyclic, w = sylow_is_cyclic(g, 3)
            ok = not cyclic and w.element_order == 3 and w.sylow_order == 9
            checks.append(Check("F4 l=3: Sylow C3xC3, no element of order 9", ok,
                                f"max 3-order {w.element_order}, Sylow order {w.sylow_order}"))
            cyclic2, w2 = sylow_is_cyclic(g, 2)
            checks.append(Check("F4 l=2: no element of order 2^7", not cyclic2 and w2.element_order < 128,
                                f"max 2-order {w2.element_order}"))
        if str(t) == "G2":
            cyclic, w = sylow_is_cyclic(g, 2)
            checks.append(Check("G2 l=2: dihedral of order 12, Sylow not cyclic",
                                g.order == 12 and not cyclic, f"max 2-order {w.element_order}"))
        del g
    checks.extend(_e8_sylow_checks())
    return checks


def e8_sylow_table() -> dict[int, tuple[bool, str]]:
    """Sylow cyclicity of W(E8) for l <= 13 without enumerating the group.

    l = 2, 3: W(F4) sits inside W(E8) and already has non-cyclic Sylow
    subgroups. l = 5: the mod-2 quadratic form of the E8 lattice has Witt
    index 4, as does the sum of two copies of the 4-dimensional minus-type
    form, so O_8^+(2) contains two commuting copies of O_4^-(2), each with
    elements of order 5; with 25 dividing |W(E8)| the Sylow 5-subgroup is
    C5 x C5. l >= 7: the l-part of |W(E8)| is at most l.
    """
    order = group_order(IrreducibleType("E", 8))
    f4 = generate_group(realize(IrreducibleType("F", 4)))
    e8 = build_form("E8_mod2")
    qm = build_form("Q_minus_4")
    out = {}
    for l in PRIMES_TO_13:
        if l in (2, 3):
            cyclic, w = sylow_is_cyclic(f4, l)
            out[l] = (cyclic, f"W(F4) subgroup has non-cyclic Sylow {l}-subgroups" if not cyclic else "")
        elif l == 5:
            o4_order, census = isometry_group_order(qm)
            plus = witt_index(e8) == 4 and witt_index(direct_sum(qm, qm)) == 4
            c5 = census.get(5, 0) > 0 and o4_order % 25 != 0
            if plus and c5 and order % 25 == 0:
                out[l] = (False, "Witt index 4 for E8 mod 2 and q'+q': Sylow 5-subgroup C5 x C5")
            else:
                out[l] = (True, "quadratic form route failed")
        else:
            # a group of order 1 or l is cyclic
            part = l if order % l == 0 else 1
            if order % (l * l) == 0:
                out[l] = (False, "no argument available")
            else:
                out[l] = (True, f"Sylow {l}-subgroup has order {part}")
    return out


def _e8_sylow_checks() -> list[Check]:
    order = group_order(IrreducibleType("E", 8))
    table = e8_sylow_table()
    bad = [l for l, (cyclic, _) in table.items() if cyclic != (order % (l * l) != 0)]
    return [Check("sylow E8 (quadratic form route)", not bad, f"disagrees at l={bad}" if bad else "l=2..13")]


def witt_appendix(progress=_quiet, **_) -> list[Check]:
    e8 = build_form("E8_mod2")
    qm = build_form("Q_minus_4")
    o4, census = isometry_group_order(qm)
    return [
        Check("zero_count(E8 mod 2) = 136", zero_count(e8) == 136, str(zero_count(e8))),
        Check("witt_index(E8 mod 2) = 4", witt_index(e8) == 4, str(witt_index(e8))),
        Check("witt_index(q' + q') = 4", witt_index(direct_sum(qm, qm)) == 4),
        Check("witt_index(q') = 1", witt_index(qm) == 1),
        Check("zero_count(q') = 6", zero_count(qm) == 6),
        Check("O_4^-(2) has order 120 and cyclic Sylow 5-subgroups", o4 == 120 and census.get(5, 0) > 0,
              f"order {o4}, elements of order 5: {census.get(5, 0)}"),
    ]


def threshold_grid(max_n=60, max_e=30, progress=_quiet, **_) -> list[Check]:
    checks = []
    for fam, lo in (("A", 1), ("B", 2), ("D", 2)):
        bad = []
        for n in range(lo, max_n + 1):
            t = IrreducibleType(fam, n)
            p = poincare_polynomial(t)
            for e in range(2, max_e + 1):
                status, m, _ = clf.classify_one_param_irreducible(t, e)
                if clf.threshold_finite(t, e) != (status is not clf.Status.INFINITE):
                    bad.append((n, e))
                elif (m == 0) != (phi_multiplicity(p, e) == 0):
                    bad.append((n, e))
        checks.append(Check(f"thresholds vs multiplicity, type {fam}", not bad, f"first mismatch {bad[:1]}" if bad else ""))
    return checks


def two_parameter_table(progress=_quiet, **_) -> list[Check]:
    cases = [(5, 1, 5), (5, 2, 5), (7, 3, 7), (2, 0, 2), (2, 1, 2)]
    checks = []
    for e, f, bound in cases:
        got = [n for n in range(2, 41) if clf.classify_two_param_B(n, e, clf.MinusPowerF(f))[0].is_finite]
        want = [n for n in range(2, 41) if n < bound]
        checks.append(Check(f"e={e}, f={f}: finite iff n < {bound}", got == want, f"finite for n in {got}"))
    bad = [
        (n, e) for n in range(2, 61) for e in range(2, 31)
        if clf.classify_one_param_irreducible(IrreducibleType("B", n), e)[0].is_finite
        != clf.classify_two_param_B(n, e, clf.EqualQ())[0].is_finite
    ]
    checks.append(Check("one-parameter B agrees with Q = q route", not bad, f"first mismatch {bad[:1]}" if bad else ""))
    return checks


def morita_consistency(max_n=40, max_e=20, progress=_quiet, **_) -> list[Check]:
    bad = []
    for e in range(2, max_e + 1):
        for n in range(2, max_n + 1):
            formula = clf.classify_two_param_B(n, e, clf.GenericQ())[0].is_finite
            brute = all(_morita_summand(m, n - m, e).is_finite for m in range(n + 1))
            if formula != brute:
                bad.append((n, e))
    return [Check("generic Q: formula = brute force over Morita summands", not bad,
                  f"first mismatch {bad[:1]}" if bad else f"n<={max_n}, e<={max_e}")]


def _morita_summand(a: int, b: int, e: int) -> clf.Status:
    """Status of H(A_{a-1}) x H(A_{b-1}); A_{-1} and A_0 are trivial."""
    factors = [IrreducibleType("A", k - 1) for k in (a, b) if k >= 2]
    statuses = [clf.classify_one_param_irreducible(t, e)[0] for t in factors]
    return clf.combine_factors(statuses)


def kunneth_bound(samples=500, length=64, seed=0, progress=_quiet, **_) -> list[Check]:
    rng = random.Random(seed)
    failures = []
    for i in range(samples):
        c = rng.randint(1, 10)
        a = [rng.randint(1, c) for _ in range(length)]
        b = [rng.randint(1, c) for _ in range(length)]
        conv = kunneth_convolve(a, b)
        for t, v in enumerate(conv):
            if not t + 1 <= v <= c * c * (t + 1):
                failures.append((i, t))
                break
    const = kunneth_convolve([3] * length, [5] * length)
    s = complexity_upper_bound(const)
    return [
        Check(f"t+1 <= c_t <= C^2 (t+1) on {samples} random pairs", not failures,
              f"first failure {failures[:1]}" if failures else ""),
        Check("complexity of constant (x) constant is 2", s == 2, f"got {s}"),
    ]


def product_rule(samples=200, max_e=20, seed=0, progress=_quiet, **_) -> list[Check]:
    rng = random.Random(seed)
    pool = irreducible_types_up_to_rank(8, max_m=12)
    mismatches = []
    for i in range(samples):
        factors = tuple(rng.choice(pool) for _ in range(rng.randint(2, 4)))
        e = rng.randint(2, max_e)
        rep = clf.classify(clf.ClassificationInput(WeylSpec(factors), 0, clf.RootOfUnity(e)))
        perm = list(factors)
        rng.shuffle(perm)
        rep2 = clf.classify(clf.ClassificationInput(WeylSpec(tuple(perm)), 0, clf.RootOfUnity(e)))
        combined = clf.combine_factors([f.status for f in rep.per_factor])
        bad_count = sum(f.status is clf.Status.FINITE_NOT_SEMISIMPLE for f in rep.per_factor)
        if rep.overall != combined or rep.overall != rep2.overall:
            mismatches.append(str(WeylSpec(factors)))
        elif bad_count >= 2 and rep.overall is not clf.Status.INFINITE:
            mismatches.append(str(WeylSpec(factors)))
    return [Check(f"product rule on {samples} random products", not mismatches,
                  f"first mismatch {mismatches[:1]}" if mismatches else "")]


SUITES: dict[str, Callable[..., list[Check]]] = {
    "poincare-oracle": poincare_oracle,
    "multiplicity-oracle": multiplicity_oracle,
    "sylow-oracle": sylow_oracle,
    "morita-consistency": morita_consistency,
    "kunneth-bound": kunneth_bound,
    "witt-appendix": witt_appendix,
    "threshold-grid": threshold_grid,
    "two-parameter-table": two_parameter_table,
    "product-rule": product_rule,
}


def run_suite(name: str, progress=_quiet, **limits) -> list[Check]:
    if name == "all":
        return list(itertools.chain.from_iterable(
            fn(progress=progress, **limits) for fn in SUITES.values()
        ))
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](progress=progress, **limits)
