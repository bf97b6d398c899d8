"""Quadratic forms over GF(2).

A form on GF(2)^n is stored as an upper-triangular bit matrix ``c`` with
``q(x) = sum_{i <= j} c_ij x_i x_j``. Its polar form
``b(x, y) = q(x + y) + q(x) + q(y)`` has Gram matrix ``c + c^T`` with zero
diagonal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .coxeter import cartan_matrix
from .weyl import IrreducibleType

__all__ = [
    "F2QuadraticForm",
    "build_form",
    "direct_sum",
    "witt_index",
    "zero_count",
    "witt_index_from_zero_count",
    "isometry_group_order",
    "hyperbolic_plane",
    "MAX_BRUTE_DIM",
]

MAX_BRUTE_DIM = 24


@dataclass(frozen=True)
class F2QuadraticForm:
    dim: int
    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.int64).reshape(self.dim, self.dim) % 2
        c = np.triu(c)
        object.__setattr__(self, "coeffs", tuple(tuple(int(x) for x in row) for row in c))

    @classmethod
    def from_matrix(cls, c) -> F2QuadraticForm:
        """Build from any square matrix; entries below the diagonal are folded upward."""
        c = np.asarray(c, dtype=np.int64) % 2
        n = c.shape[0]
        upper = np.triu(c) + np.triu(c.T, 1)
        return cls(n, tuple(map(tuple, upper % 2)))

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64).reshape(self.dim, self.dim)

    def polar_matrix(self) -> np.ndarray:
        c = self.matrix
        b = (c + c.T) % 2
        np.fill_diagonal(b, 0)
        return b

    def __call__(self, x) -> int:
        x = np.asarray(x, dtype=np.int64) % 2
        return int(x @ self.matrix @ x) % 2

    def polar(self, x, y) -> int:
        x = np.asarray(x, dtype=np.int64) % 2
        y = np.asarray(y, dtype=np.int64) % 2
        return int(x @ self.polar_matrix() @ y) % 2

    def values(self) -> np.ndarray:
        """``q`` on every vector of GF(2)^dim, indexed by the integer whose bits are ``x``."""
        if self.dim > MAX_BRUTE_DIM:
            raise ValueError(f"exhaustive evaluation limited to dim <= {MAX_BRUTE_DIM}")
        idx = np.arange(2 ** self.dim, dtype=np.int64)
        bits = ((idx[:, None] >> np.arange(self.dim)) & 1).astype(np.int8)
        out = np.zeros(idx.size, dtype=np.int8)
        c = self.matrix
        for i, j in zip(*np.nonzero(c)):
            out ^= bits[:, i] & bits[:, j]
        return out

    def radical(self) -> list[np.ndarray]:
        """Basis of the radical of the polar form."""
        return _nullspace_f2(self.polar_matrix())

    def is_nondegenerate(self) -> bool:
        return not self.radical()


def _nullspace_f2(m: np.ndarray) -> list[np.ndarray]:
    m = np.array(m, dtype=np.int64) % 2
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        hit = next((i for i in range(r, rows) if m[i, c]), None)
        if hit is None:
            continue
        m[[r, hit]] = m[[hit, r]]
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] ^= m[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = m[i, f]
        basis.append(v)
    return basis


def hyperbolic_plane() -> F2QuadraticForm:
    return F2QuadraticForm(2, ((0, 1), (0, 0)))


def build_form(kind: str) -> F2QuadraticForm:
    """``"E8_mod2"``: ``(x, x)/2 mod 2`` on the E8 root lattice mod 2, in the
    simple-root basis. ``"Q_minus_4"``: ``x1 x2 + x3^2 + x3 x4 + x4^2``.
    """
    if kind == "E8_mod2":
        # simply laced: Gram matrix = Cartan matrix, (a_i, a_i) = 2
        gram = cartan_matrix(IrreducibleType("E", 8))
        n = gram.shape[0]
        c = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            c[i, i] = gram[i, i] // 2
            for j in range(i + 1, n):
                c[i, j] = gram[i, j]
        return F2QuadraticForm(n, tuple(map(tuple, c % 2)))
    if kind == "Q_minus_4":
        c = np.zeros((4, 4), dtype=np.int64)
        c[0, 1] = c[2, 2] = c[2, 3] = c[3, 3] = 1
        return F2QuadraticForm(4, tuple(map(tuple, c)))
    raise ValueError(f"unknown form kind {kind!r}")


def direct_sum(a: F2QuadraticForm, b: F2QuadraticForm) -> F2QuadraticForm:
    n = a.dim + b.dim
    c = np.zeros((n, n), dtype=np.int64)
    c[: a.dim, : a.dim] = a.matrix
    c[a.dim:, a.dim:] = b.matrix
    return F2QuadraticForm(n, tuple(map(tuple, c)))


def zero_count(f: F2QuadraticForm) -> int:
    """Number of vectors with ``q(x) = 0``, by exhaustive evaluation."""
    return int(np.count_nonzero(f.values() == 0))


def _restrict(f: F2QuadraticForm, basis: list[np.ndarray]) -> F2QuadraticForm:
    """The form ``y -> q(sum y_i u_i)`` in the coordinates of ``basis``."""
    k = len(basis)
    c = np.zeros((k, k), dtype=np.int64)
    for i, u in enumerate(basis):
        c[i, i] = f(u)
        for j in range(i + 1, k):
            c[i, j] = f.polar(u, basis[j])
    return F2QuadraticForm(k, tuple(map(tuple, c)))


def _first_singular(f: F2QuadraticForm) -> np.ndarray | None:
    # a form in >= 3 variables over GF(2) always has a nontrivial zero
    # (Chevalley-Warning), so this scan stops within the first 7 vectors
    for bits in itertools.islice(itertools.product((0, 1), repeat=f.dim), 1, None):
        x = np.array(bits[::-1], dtype=np.int64)
        if f(x) == 0:
            return x
    return None


def witt_index(f: F2QuadraticForm) -> int:
    """Dimension of a maximal totally singular subspace.

    The singular part of the polar radical is split off first: a singular
    radical vector can be added to every totally singular subspace and ``q``
    descends to the quotient. What remains has an anisotropic radical, and
    hyperbolic planes are split off greedily (a singular vector, a partner
    with polar pairing 1 adjusted to be singular, then recurse on the polar
    complement) until no nonzero singular vector is left.
    """
    if f.dim > MAX_BRUTE_DIM:
        raise ValueError(f"witt_index limited to dim <= {MAX_BRUTE_DIM}")
    index = 0
    rad = f.radical()
    if rad:
        # q is additive on the radical, hence linear there
        rad_form = _restrict(f, rad)
        lin = np.array([rad_form(np.eye(len(rad), dtype=np.int64)[i]) for i in range(len(rad))])
        kernel = _nullspace_f2(lin[None, :])
        index += len(kernel)
        singular_rad = [sum(k[i] * rad[i] for i in range(len(rad))) % 2 for k in kernel]
        complement = _complement_basis(singular_rad, f.dim)
        f = _restrict(f, complement)
    while f.dim:
        v = _first_singular(f)
        if v is None:
            break
        b = f.polar_matrix()
        pair = (v @ b) % 2
        partner_at = np.flatnonzero(pair)
        if not partner_at.size:
            raise ArithmeticError("singular vector in an anisotropic radical")
        w = np.zeros(f.dim, dtype=np.int64)
        w[partner_at[0]] = 1
        if f(w):
            w = (w + v) % 2
        # polar complement of <v, w>: x -> x + b(x, w) v + b(x, v) w
        rest = []
        for i in range(f.dim):
            x = np.zeros(f.dim, dtype=np.int64)
            x[i] = 1
            y = (x + f.polar(x, w) * v + f.polar(x, v) * w) % 2
            rest.append(y)
        rest = _independent(rest)
        index += 1
        f = _restrict(f, rest)
    return index


def _independent(vectors: list[np.ndarray]) -> list[np.ndarray]:
    """A maximal linearly independent subfamily, in order."""
    chosen, reduced = [], []
    for v in vectors:
        r = v.copy() % 2
        for pivot, rv in reduced:
            if r[pivot]:
                r = (r + rv) % 2
        nz = np.flatnonzero(r)
        if nz.size:
            reduced.append((nz[0], r))
            chosen.append(v % 2)
    return chosen


def _complement_basis(sub: list[np.ndarray], n: int) -> list[np.ndarray]:
    """Standard basis vectors that extend a basis of ``sub`` to GF(2)^n."""
    chosen = [s % 2 for s in sub]
    out = []
    for i in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[i] = 1
        if len(_independent(chosen + [e])) > len(chosen):
            chosen.append(e)
            out.append(e)
    return out


def witt_index_from_zero_count(f: F2QuadraticForm) -> int:
    """Witt index of a nondegenerate form of even dimension 2m from its zero count.

    Plus type has ``2^(2m-1) + 2^(m-1)`` zeros and index m; minus type has
    ``2^(2m-1) - 2^(m-1)`` zeros and index m-1.
    """
    if f.dim % 2 or not f.is_nondegenerate():
        raise ValueError("zero-count classification needs a nondegenerate even-dimensional form")
    m = f.dim // 2
    z = zero_count(f)
    if z == 2 ** (2 * m - 1) + 2 ** (m - 1):
        return m
    if z == 2 ** (2 * m - 1) - 2 ** (m - 1):
        return m - 1
    raise ArithmeticError(f"zero count {z} fits neither type in dimension {f.dim}")


def isometry_group_order(f: F2QuadraticForm) -> tuple[int, dict[int, int]]:
    """Order of the isometry group of a small form, with its element-order census.

    Exhaustive over all invertible matrices, so only for dim <= 4.
    """
    if f.dim > 4:
        raise ValueError("isometry enumeration limited to dim <= 4")
    n = f.dim
    vals = f.values()
    weights = 1 << np.arange(n)
    census: dict[int, int] = {}
    count = 0
    for cols in itertools.product(range(1, 2 ** n), repeat=n):
        if len(_independent([((c >> np.arange(n)) & 1) for c in cols])) < n:
            continue
        g = np.array([((c >> np.arange(n)) & 1) for c in cols], dtype=np.int64).T
        # image of every vector x, as an integer
        xs = ((np.arange(2 ** n)[:, None] >> np.arange(n)) & 1)
        images = ((xs @ g.T) % 2) @ weights
        if not np.array_equal(vals[images], vals):
            continue
        count += 1
        order, p = 1, g.copy()
        while not np.array_equal(p, np.eye(n, dtype=np.int64)):
            p = (p @ g) % 2
            order += 1
        census[order] = census.get(order, 0) + 1
    return count, dict(sorted(census.items()))
