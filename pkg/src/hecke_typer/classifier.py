"""Semisimple / finite / infinite representation type decisions.

Three regimes are covered:

* q = 1 (group algebras): finite type exactly when l^2 does not divide |W|,
  semisimple exactly when l does not divide |W| (Maschke).
* q of multiplicative order e >= 2, one parameter: the multiplicity of the
  e-th cyclotomic polynomial in the Poincare polynomial decides, 0 meaning
  semisimple, 1 finite and not semisimple, 2 or more infinite.
* type B with an independent second parameter Q, either generic
  (Q != -q^f for all f) or -Q = q^f.

Products combine factor by factor: a product is semisimple when all factors
are, of finite type when at most one factor is not semisimple, and of
infinite type otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .polyring import degree_count_multiplicity
from .weyl import IrreducibleType, WeylSpec, degrees, group_order, is_weyl, parse_type_spec

__all__ = [
    "Status",
    "Basis",
    "QIsOne",
    "RootOfUnity",
    "EqualQ",
    "QOne",
    "GenericQ",
    "MinusPowerF",
    "ClassificationInput",
    "FactorReport",
    "ClassificationReport",
    "NonWeylFactor",
    "InvalidInput",
    "classify_one_param_irreducible",
    "threshold_finite",
    "classify_two_param_B",
    "classify_group_algebra",
    "combine_factors",
    "classify",
    "parse_second_parameter",
]


class InvalidInput(ValueError):
    pass


class NonWeylFactor(InvalidInput):
    """A dihedral factor that is not a Weyl group was given to the q = 1 route."""


class Status(enum.Enum):
    SEMISIMPLE = "Semisimple"
    FINITE_NOT_SEMISIMPLE = "FiniteNotSemisimple"
    FINITE = "Finite"  # finite type, semisimplicity not decided
    INFINITE = "Infinite"

    @property
    def badness(self) -> int:
        return {"Semisimple": 0, "FiniteNotSemisimple": 1, "Finite": 1, "Infinite": 2}[self.value]

    @property
    def is_finite(self) -> bool:
        return self is not Status.INFINITE

    def __str__(self):
        return self.value


class Basis(enum.Enum):
    THEOREM = "theorem"
    DERIVED = "derived"
    CONJECTURAL = "conjectural"

    @property
    def strength(self) -> int:
        return {"theorem": 2, "derived": 1, "conjectural": 0}[self.value]

    def __str__(self):
        return self.value


def weakest(bases: Iterable[Basis]) -> Basis:
    return min(bases, key=lambda b: b.strength, default=Basis.THEOREM)


# quantum parameter

@dataclass(frozen=True)
class QIsOne:
    pass


@dataclass(frozen=True)
class RootOfUnity:
    e: int

    def __post_init__(self):
        if not isinstance(self.e, int) or self.e < 2:
            raise InvalidInput(f"e must be an integer >= 2, got {self.e!r}")


# second type-B parameter Q

@dataclass(frozen=True)
class EqualQ:
    """Q = q: the one-parameter algebra."""


@dataclass(frozen=True)
class QOne:
    """Q = 1."""


@dataclass(frozen=True)
class GenericQ:
    """Q is not of the form -q^f."""


@dataclass(frozen=True)
class MinusPowerF:
    """-Q = q^f with 0 <= f < e."""

    f: int


SecondParameter = EqualQ | QOne | GenericQ | MinusPowerF

_BQ_KINDS = {EqualQ: "equal_q", QOne: "one", GenericQ: "generic", MinusPowerF: "minus_power"}


def parse_second_parameter(kind: str, f: int | None = None) -> SecondParameter:
    key = kind.replace("-", "_").lower()
    if key == "minus_power":
        if f is None:
            raise InvalidInput("minus-power needs f")
        return MinusPowerF(f)
    if f is not None:
        raise InvalidInput(f"f is only meaningful with minus-power, not {kind}")
    table = {"equal_q": EqualQ(), "one": QOne(), "generic": GenericQ()}
    if key not in table:
        raise InvalidInput(f"unknown second-parameter kind {kind!r}")
    return table[key]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class ClassificationInput:
    spec: WeylSpec
    characteristic: int = 0
    parameter: QIsOne | RootOfUnity = field(default_factory=QIsOne)
    b_second_parameter: SecondParameter | None = None

    def __post_init__(self):
        if isinstance(self.spec, str):
            object.__setattr__(self, "spec", parse_type_spec(self.spec))
        l = self.characteristic
        if not isinstance(l, int) or (l != 0 and not _is_prime(l)):
            raise InvalidInput(f"characteristic must be 0 or a prime, got {l!r}")
        p = self.parameter
        if isinstance(p, RootOfUnity) and l and p.e % l == 0:
            raise InvalidInput(f"no element of multiplicative order {p.e} exists in characteristic {l}")
        bq = self.b_second_parameter
        if bq is None:
            return
        if not any(t.family == "B" for t in self.spec):
            if not isinstance(bq, EqualQ):
                raise InvalidInput("a second parameter was given but the spec has no type-B factor")
        if isinstance(p, QIsOne) and not isinstance(bq, (EqualQ, QOne)):
            raise InvalidInput("at q = 1 only Q = q = 1 (the group algebra) is supported")
        if isinstance(bq, MinusPowerF) and isinstance(p, RootOfUnity):
            if not 0 <= bq.f < p.e:
                raise InvalidInput(f"f must satisfy 0 <= f < e, got f={bq.f}, e={p.e}")

    @property
    def uses_two_parameter_B(self) -> bool:
        return isinstance(self.parameter, RootOfUnity) and self.b_second_parameter not in (None, EqualQ())

    def to_dict(self) -> dict:
        out: dict = {"spec": str(self.spec), "characteristic": self.characteristic}
        if isinstance(self.parameter, QIsOne):
            out["q"] = {"kind": "one"}
        else:
            out["q"] = {"kind": "root_of_unity", "e": self.parameter.e}
        bq = self.b_second_parameter
        if bq is not None:
            entry = {"kind": _BQ_KINDS[type(bq)]}
            if isinstance(bq, MinusPowerF):
                entry["f"] = bq.f
            out["B_Q"] = entry
        return out

    @classmethod
    def from_dict(cls, data: dict) -> ClassificationInput:
        q = data["q"]
        param = QIsOne() if q["kind"] == "one" else RootOfUnity(int(q["e"]))
        bq = None
        if "B_Q" in data:
            bq = parse_second_parameter(data["B_Q"]["kind"], data["B_Q"].get("f"))
        return cls(parse_type_spec(data["spec"]), int(data["characteristic"]), param, bq)


@dataclass(frozen=True)
class FactorReport:
    factor: IrreducibleType
    status: Status
    criterion: str
    basis: Basis
    multiplicity: int | None = None

    def to_dict(self) -> dict:
        out = {"type": str(self.factor), "status": self.status.value}
        if self.multiplicity is not None:
            out["multiplicity"] = self.multiplicity
        out["criterion"] = self.criterion
        out["basis"] = self.basis.value
        return out

    @classmethod
    def from_dict(cls, data: dict) -> FactorReport:
        (factor,) = parse_type_spec(data["type"]).factors
        return cls(
            factor,
            Status(data["status"]),
            data["criterion"],
            Basis(data["basis"]),
            data.get("multiplicity"),
        )


@dataclass(frozen=True)
class ClassificationReport:
    input: ClassificationInput
    per_factor: tuple[FactorReport, ...]
    overall: Status
    overall_basis: Basis

    def to_dict(self) -> dict:
        return {
            "input": self.input.to_dict(),
            "factors": [r.to_dict() for r in self.per_factor],
            "overall": {"status": self.overall.value, "basis": self.overall_basis.value},
        }

    @classmethod
    def from_dict(cls, data: dict) -> ClassificationReport:
        return cls(
            ClassificationInput.from_dict(data["input"]),
            tuple(FactorReport.from_dict(f) for f in data["factors"]),
            Status(data["overall"]["status"]),
            Basis(data["overall"]["basis"]),
        )


# criterion labels carried by reports
CRIT_MASCHKE = "maschke: l does not divide |W|"
CRIT_SYLOW = "cyclic Sylow: l^2 does not divide |W|"
CRIT_SIMPLE_ROOT = "simple-root: multiplicity of Phi_e in P_W"
CRIT_GENERIC_Q = "generic Q: Morita reduction to type A, n < 2e"
CRIT_MINUS_POWER = "-Q = q^f: n < min{e, 2 min{f, e-f} + 4}"


def _status_from_multiplicity(m: int) -> Status:
    if m == 0:
        return Status.SEMISIMPLE
    if m == 1:
        return Status.FINITE_NOT_SEMISIMPLE
    return Status.INFINITE


def classify_one_param_irreducible(t: IrreducibleType, e: int) -> tuple[Status, int, Basis]:
    """Status, Phi_e-multiplicity and basis for the one-parameter algebra of ``t``.

    Classical types and dihedral groups are settled; for exceptional types
    the finite/infinite split is conjectural. Semisimplicity (multiplicity 0)
    holds for every type.
    """
    if e < 2:
        raise InvalidInput("e must be >= 2")
    m = degree_count_multiplicity(degrees(t), e)
    status = _status_from_multiplicity(m)
    if t.family in ("E", "F") and status is not Status.SEMISIMPLE:
        basis = Basis.CONJECTURAL
    else:
        basis = Basis.THEOREM
    return status, m, basis


def threshold_finite(t: IrreducibleType, e: int) -> bool:
    """Finite representation type by the closed-form thresholds, no polynomials involved.

    ``A_{n-1}``: n < 2e. ``B_n`` (Q = q) and ``D_n``: n < 2e for odd e,
    n < e for even e.
    """
    if e < 2:
        raise InvalidInput("e must be >= 2")
    if t.family == "A":
        return t.rank + 1 < 2 * e
    if t.family in ("B", "D"):
        n = t.rank
        return n < 2 * e if e % 2 else n < e
    raise InvalidInput(f"no threshold formula for {t}")


def _normalize_second_parameter(e: int, qspec: SecondParameter) -> SecondParameter:
    # -q = q^(e/2 + 1) and -1 = q^(e/2) when e is even; for odd e neither
    # -q nor -1 is a power of q, so the parameter is generic
    if isinstance(qspec, EqualQ):
        return MinusPowerF((e // 2 + 1) % e) if e % 2 == 0 else GenericQ()
    if isinstance(qspec, QOne):
        return MinusPowerF(e // 2) if e % 2 == 0 else GenericQ()
    return qspec


def classify_two_param_B(n: int, e: int, qspec: SecondParameter) -> tuple[Status, Basis]:
    """Representation type of the two-parameter type-B algebra of rank ``n``."""
    if n < 2:
        raise InvalidInput("type B needs n >= 2")
    if e < 2:
        raise InvalidInput("e must be >= 2")
    if isinstance(qspec, MinusPowerF) and not 0 <= qspec.f < e:
        raise InvalidInput(f"f must satisfy 0 <= f < e, got f={qspec.f}, e={e}")
    norm = _normalize_second_parameter(e, qspec)
    if isinstance(norm, GenericQ):
        if n >= 2 * e:
            return Status.INFINITE, Basis.THEOREM
        # every Morita summand A_{m-1} x A_{n-m-1} has one semisimple factor;
        # all are semisimple exactly when n < e
        if n < e:
            return Status.SEMISIMPLE, Basis.DERIVED
        return Status.FINITE_NOT_SEMISIMPLE, Basis.DERIVED
    f = norm.f
    finite = n < min(e, 2 * min(f, e - f) + 4)
    if not finite:
        return Status.INFINITE, Basis.THEOREM
    if isinstance(qspec, EqualQ):
        status, _, _ = classify_one_param_irreducible(IrreducibleType("B", n), e)
        return status, Basis.THEOREM
    return Status.FINITE, Basis.THEOREM


def _group_algebra_factor(t: IrreducibleType, l: int) -> FactorReport:
    if not is_weyl(t):
        raise NonWeylFactor(
            f"{t} is not a Weyl group; the l^2 criterion fails for dihedral groups in general"
        )
    order = group_order(t)
    # Maschke: l = 0 or l coprime to |W| gives a semisimple group algebra
    if l == 0 or order % l:
        return FactorReport(t, Status.SEMISIMPLE, CRIT_MASCHKE, Basis.THEOREM)
    if order % (l * l):
        return FactorReport(t, Status.FINITE_NOT_SEMISIMPLE, CRIT_SYLOW, Basis.THEOREM)
    return FactorReport(t, Status.INFINITE, CRIT_SYLOW, Basis.THEOREM)


def classify_group_algebra(spec: WeylSpec, l: int) -> ClassificationReport:
    """Group algebra of a Weyl group in characteristic ``l`` (q = 1)."""
    inp = ClassificationInput(spec, l, QIsOne())
    factors = tuple(_group_algebra_factor(t, l) for t in spec)
    return _assemble(inp, factors)


def combine_factors(statuses: Sequence[Status]) -> Status:
    """Status of a tensor product from the statuses of its factors."""
    bad = [s for s in statuses if s is not Status.SEMISIMPLE]
    if not bad:
        return Status.SEMISIMPLE
    if any(s is Status.INFINITE for s in bad) or len(bad) >= 2:
        return Status.INFINITE
    return bad[0]


def _assemble(inp: ClassificationInput, factors: tuple[FactorReport, ...]) -> ClassificationReport:
    statuses = [f.status for f in factors]
    overall = combine_factors(statuses)
    basis = weakest(f.basis for f in factors)
    undecided = sum(1 for s in statuses if s is Status.FINITE)
    decided_bad = sum(1 for s in statuses if s is Status.FINITE_NOT_SEMISIMPLE)
    if overall is Status.INFINITE and Status.INFINITE not in statuses and decided_bad < 2 and undecided:
        # the infinite verdict leans on factors whose semisimplicity is open
        basis = Basis.CONJECTURAL
    return ClassificationReport(inp, factors, overall, basis)


def classify(inp: ClassificationInput) -> ClassificationReport:
    if isinstance(inp.parameter, QIsOne):
        factors = tuple(_group_algebra_factor(t, inp.characteristic) for t in inp.spec)
        return _assemble(inp, factors)
    e = inp.parameter.e
    out = []
    for t in inp.spec:
        if t.family == "B" and inp.uses_two_parameter_B:
            qspec = inp.b_second_parameter
            status, basis = classify_two_param_B(t.rank, e, qspec)
            norm = _normalize_second_parameter(e, qspec)
            crit = CRIT_GENERIC_Q if isinstance(norm, GenericQ) else CRIT_MINUS_POWER
            out.append(FactorReport(t, status, crit, basis))
        else:
            status, m, basis = classify_one_param_irreducible(t, e)
            out.append(FactorReport(t, status, CRIT_SIMPLE_ROOT, basis, m))
    return _assemble(inp, tuple(out))
