"""Brute-force realization of finite Coxeter groups.

Every Weyl type is realized by its simple reflections acting on the root
lattice in the simple-root basis::

    s_i(alpha_j) = alpha_j - a_ij * alpha_i,   a_ij = <alpha_i^vee, alpha_j>

so each generator is the integer matrix ``I - e_i a_i`` (row ``i`` of the
Cartan matrix subtracted from row ``i`` of the identity). Dihedral I2(m)
outside m in {3, 4, 6} has no integral 2x2 reflection representation, so it
is realized instead by the two reflections of a regular m-gon acting on its
vertices as m x m permutation matrices.

The group is enumerated by breadth-first search in the right Cayley graph.
Because ``l(ws) = l(w) +- 1`` for every simple reflection ``s``, the
neighbours of the length-k layer lie in layers k-1 and k+1, so layer k+1 is
the set of neighbours of layer k minus layer k-1. The search never needs a
global visited set, and the BFS depth of an element is its Coxeter length.
"""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .polyring import IntPolynomial
from .weyl import IrreducibleType, group_order

__all__ = [
    "CapExceeded",
    "ReflectionRealization",
    "GroupTable",
    "SylowWitness",
    "cartan_matrix",
    "realize",
    "generate_group",
    "poincare_bruteforce",
    "element_order",
    "element_orders",
    "sylow_is_cyclic",
    "max_prime_power_orders",
    "default_element_cap",
    "regular_vector",
    "DEFAULT_ELEMENT_CAP",
]

log = logging.getLogger(__name__)

DEFAULT_ELEMENT_CAP = 4_000_000
CAP_ENV_VAR = "HECKE_TYPER_MAX_ELEMENTS"

# element-order powering works on batches to bound peak memory
_ORDER_CHUNK = 200_000


class CapExceeded(RuntimeError):
    """The group has more elements than the enumeration cap allows."""

    def __init__(self, label, cap, order=None):
        self.label = label
        self.cap = cap
        self.order = order
        detail = f" (order {order})" if order is not None else ""
        super().__init__(f"{label}{detail} exceeds the enumeration cap of {cap} elements")


def default_element_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw:
        try:
            cap = int(raw)
        except ValueError:
            raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
        if cap < 1:
            raise ValueError(f"{CAP_ENV_VAR} must be positive")
        return cap
    return DEFAULT_ELEMENT_CAP


def _chain(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def cartan_matrix(t: IrreducibleType) -> np.ndarray:
    """Cartan matrix ``a_ij = <alpha_i^vee, alpha_j>`` (Bourbaki numbering, 0-based).

    I2(m) only has one for m in {3, 4, 6}.
    """
    fam, n = t.family, t.rank
    a = 2 * np.eye(n, dtype=np.int64)

    def link(i, j, aij=-1, aji=-1):
        a[i, j] = aij
        a[j, i] = aji

    if fam == "A":
        for i, j in _chain(n):
            link(i, j)
    elif fam == "B":
        for i, j in _chain(n - 1):
            link(i, j)
        # alpha_n short
        link(n - 2, n - 1, -1, -2)
    elif fam == "D":
        if n >= 3:
            for i, j in _chain(n - 1):
                link(i, j)
            link(n - 3, n - 1)
    elif fam == "E":
        # 1-3-4-5-...-n with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif fam == "G" or (fam == "I2" and t.m == 6):
        link(0, 1, -3, -1)
    elif fam == "I2" and t.m == 3:
        link(0, 1)
    elif fam == "I2" and t.m == 4:
        link(0, 1, -1, -2)
    else:
        raise ValueError(f"{t} has no integral Cartan matrix")
    return a


@dataclass(frozen=True)
class ReflectionRealization:
    """Simple reflections of a Coxeter type as integer matrices.

    ``rank`` counts generators; ``dim`` is the size of the matrices, which
    differs from the rank only for the m-gon realization of I2(m).
    """

    label: str
    rank: int
    dim: int
    generator_matrices: tuple[np.ndarray, ...]
    expected_order: int | None = None
    cartan: np.ndarray | None = None

    def identity(self) -> np.ndarray:
        return np.eye(self.dim, dtype=np.int8)

    def coxeter_element(self) -> np.ndarray:
        w = self.identity().astype(np.int64)
        for s in self.generator_matrices:
            w = w @ s
        return w.astype(np.int8)


def _polygon_reflections(m: int) -> tuple[np.ndarray, np.ndarray]:
    # vertex i -> -i and i -> 1 - i; their product is the rotation i -> i - 1
    s = np.zeros((m, m), dtype=np.int8)
    t = np.zeros((m, m), dtype=np.int8)
    for i in range(m):
        s[(-i) % m, i] = 1
        t[(1 - i) % m, i] = 1
    return s, t


def realize(t: IrreducibleType) -> ReflectionRealization:
    if t.family == "I2" and t.m not in (3, 4, 6):
        gens = _polygon_reflections(t.m)
        return ReflectionRealization(str(t), 2, t.m, gens, group_order(t))
    a = cartan_matrix(t)
    n = a.shape[0]
    gens = []
    for i in range(n):
        s = np.eye(n, dtype=np.int64)
        s[i, :] -= a[i, :]
        gens.append(s.astype(np.int8))
    return ReflectionRealization(str(t), n, n, tuple(gens), group_order(t), a)


def _keys(mats: np.ndarray) -> np.ndarray:
    """Row-major byte encoding of each matrix, as a 1-d void array."""
    flat = np.ascontiguousarray(mats.reshape(mats.shape[0], mats.shape[1] * mats.shape[2]))
    return flat.view(np.dtype((np.void, flat.shape[1] * flat.itemsize))).ravel()


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A fully enumerated finite group.

    ``elements`` holds the matrices in BFS order, so the first element is the
    identity and ``lengths`` is non-decreasing.
    """

    label: str
    generators: tuple[np.ndarray, ...]
    elements: np.ndarray
    lengths: np.ndarray
    layer_sizes: tuple[int, ...] = field(default=())
    regular: np.ndarray | None = None

    @property
    def order(self) -> int:
        return int(self.elements.shape[0])

    @property
    def dim(self) -> int:
        return int(self.elements.shape[1])

    @property
    def identity(self) -> np.ndarray:
        return self.elements[0]

    @cached_property
    def _index(self) -> dict[bytes, int]:
        return {k.tobytes(): i for i, k in enumerate(_keys(self.elements))}

    def index_of(self, w) -> int:
        w = np.asarray(w, dtype=np.int8).reshape(self.dim, self.dim)
        try:
            return self._index[w.tobytes()]
        except KeyError:
            raise KeyError("matrix is not an element of this group") from None

    def __contains__(self, w) -> bool:
        try:
            self.index_of(w)
        except KeyError:
            return False
        return True

    def length_of(self, w) -> int:
        return int(self.lengths[self.index_of(w)])

    def length_histogram(self) -> dict[int, int]:
        return {k: int(c) for k, c in enumerate(self.layer_sizes)}

    @cached_property
    def orders(self) -> np.ndarray:
        return element_orders(self)


def _right_multipliers(r: ReflectionRealization):
    """Per generator: rows where it differs from the identity, and those rows of ``s - I``.

    ``w @ s = w + w[:, rows] @ (s - I)[rows]``; a Cartan reflection differs
    from the identity in one row, so this is a rank-one update.
    """
    ident = np.eye(r.dim, dtype=np.int16)
    out = []
    for s in r.generator_matrices:
        delta = s.astype(np.int16) - ident
        rows = np.flatnonzero(np.any(delta != 0, axis=1))
        out.append((rows, delta[rows]))
    return out


def regular_vector(r: ReflectionRealization) -> tuple[np.ndarray, int]:
    """A vector with trivial stabilizer, and a bound on the coordinates of its orbit.

    For a Cartan realization this is the smallest integral multiple of rho
    (``<alpha_i^vee, v>`` equal and positive for all i). Every orbit point
    ``wv`` lies between ``w0 v`` and ``v`` in dominance order and ``-w0``
    permutes the simple roots, so orbit coordinates are bounded by ``max v``.
    For the m-gon permutation realization any vector with distinct entries
    has trivial stabilizer.
    """
    if r.cartan is None:
        return np.arange(r.dim, dtype=np.int64), r.dim - 1
    a = r.cartan
    det = round(np.linalg.det(a))
    c = np.rint(det * np.linalg.solve(a, np.ones(r.dim))).astype(np.int64)
    c //= np.gcd.reduce(c)
    pairing = a @ c
    if not (np.all(pairing == pairing[0]) and pairing[0] > 0):
        raise ArithmeticError(f"failed to build a regular vector for {r.label}")
    return c, int(c.max())


def _key_packer(v: np.ndarray, bound: int):
    """Exact map from orbit vectors (rows) to sortable 1-d keys."""
    radix = 2 * bound + 1
    if radix ** len(v) < 2 ** 62:
        weights = radix ** np.arange(len(v), dtype=np.int64)

        def pack(vecs):
            return (vecs + bound) @ weights
    else:
        def pack(vecs):
            return _keys(np.ascontiguousarray(vecs, dtype=np.int32)[:, :, None])
    return pack


def generate_group(r: ReflectionRealization, element_cap: int | None = None) -> GroupTable:
    """Enumerate the group generated by ``r`` by layered Cayley-graph BFS.

    Elements are stored as matrices; duplicates are detected through the
    image ``w v`` of a vector ``v`` with trivial stabilizer, which determines
    ``w``. Within a layer, elements are ordered by that key, so the table is
    reproducible. Raises :class:`CapExceeded` as soon as the element count
    (known in advance or discovered) passes ``element_cap``.
    """
    cap = default_element_cap() if element_cap is None else element_cap
    if r.expected_order is not None and r.expected_order > cap:
        raise CapExceeded(r.label, cap, r.expected_order)
    d = r.dim
    multipliers = _right_multipliers(r)
    v, bound = regular_vector(r)
    pack = _key_packer(v, bound)
    # (w s) v = w (s v)
    shifted = [s.astype(np.float32) @ v.astype(np.float32) for s in r.generator_matrices]
    current = r.identity()[None, :, :]
    previous_keys = pack(np.empty((0, d), dtype=np.int64))
    current_keys = pack(v[None, :])
    layers = []
    total = 0
    while current.shape[0]:
        layers.append(current)
        total += current.shape[0]
        if total > cap:
            raise CapExceeded(r.label, cap)
        n_cur = current.shape[0]
        flat = current.reshape(n_cur * d, d).astype(np.float32)
        vecs = np.concatenate([np.rint(flat @ sv).reshape(n_cur, d) for sv in shifted])
        del flat
        vecs = vecs.astype(np.int64)
        if vecs.size and np.abs(vecs).max() > bound:
            raise ArithmeticError(f"orbit of the regular vector of {r.label} escaped its bound")
        uniq, first = np.unique(pack(vecs), return_index=True)
        fresh = ~np.isin(uniq, previous_keys)
        previous_keys, current_keys = current_keys, uniq[fresh]
        chosen = first[fresh]
        gen_of, src = np.divmod(chosen, n_cur)
        nxt = np.empty((chosen.size, d, d), dtype=np.int8)
        for gi, (rows, delta) in enumerate(multipliers):
            sel = np.flatnonzero(gen_of == gi)
            if not sel.size:
                continue
            wide = current[src[sel]].astype(np.int16)
            prod = wide.copy()
            for k, row in zip(rows, delta):
                prod += wide[:, :, k, None] * row[None, None, :]
            if np.abs(prod).max() > 127:
                raise OverflowError(f"matrix entries of {r.label} leave the int8 range")
            nxt[sel] = prod
        current = nxt
        log.debug("%s: layer %d has %d elements", r.label, len(layers), current.shape[0])
    sizes = tuple(x.shape[0] for x in layers)
    elements = np.empty((total, d, d), dtype=np.int8)
    pos = 0
    for block in layers:
        elements[pos:pos + block.shape[0]] = block
        pos += block.shape[0]
    del layers
    lengths = np.repeat(np.arange(len(sizes), dtype=np.int32), sizes)
    return GroupTable(
        label=r.label,
        generators=tuple(r.generator_matrices),
        elements=elements,
        lengths=lengths,
        layer_sizes=sizes,
        regular=v,
    )


def poincare_bruteforce(g: GroupTable) -> IntPolynomial:
    """Sum of ``x^l(w)`` over the enumerated elements."""
    counts = np.bincount(g.lengths)
    return IntPolynomial(int(c) for c in counts)


def element_order(g: GroupTable, w) -> int:
    w = np.asarray(w, dtype=np.int64).reshape(g.dim, g.dim)
    ident = np.eye(g.dim, dtype=np.int64)
    p = w.copy()
    k = 1
    while not np.array_equal(p, ident):
        p = p @ w
        k += 1
        if k > g.order:
            raise ValueError("matrix does not have finite order within the group")
    return k


def element_orders(g: GroupTable) -> np.ndarray:
    """Orders of all elements, aligned with ``g.elements``.

    With ``v`` of trivial stabilizer, ``w^k = 1`` exactly when ``w^k v = v``,
    so only matrix-vector products are needed. They run in float32, which
    is exact for the small integers involved.
    """
    n, d = g.order, g.dim
    v = g.regular if g.regular is not None else np.arange(d)
    v = v.astype(np.float32)
    out = np.zeros(n, dtype=np.int64)
    for start in range(0, n, _ORDER_CHUNK):
        mats = g.elements[start:start + _ORDER_CHUNK].astype(np.float32)
        idx = np.arange(start, start + mats.shape[0])
        u = mats @ v
        k = 1
        while idx.size:
            done = np.all(u == v, axis=1)
            out[idx[done]] = k
            keep = ~done
            idx, mats, u = idx[keep], mats[keep], u[keep]
            if idx.size:
                u = np.einsum("nij,nj->ni", mats, u)
                k += 1
                if k > n:
                    raise RuntimeError("element order exceeds group order")
    return out


def _prime_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def max_prime_power_orders(g: GroupTable, primes) -> dict[int, int]:
    """Largest power of each prime that occurs as (a divisor of) an element order."""
    distinct = np.unique(g.orders)
    return {p: max(_prime_part(int(o), p) for o in distinct) for p in primes}


@dataclass(frozen=True)
class SylowWitness:
    """Evidence for a Sylow cyclicity verdict.

    ``element`` has order ``element_order``, the largest ``l``-power order
    occurring in the group; the Sylow subgroups have order ``sylow_order``.
    """

    element: np.ndarray
    element_order: int
    sylow_order: int


def _power(w: np.ndarray, k: int) -> np.ndarray:
    result = np.eye(w.shape[0], dtype=np.int64)
    base = w.astype(np.int64)
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result.astype(np.int8)


def sylow_is_cyclic(g: GroupTable, l: int) -> tuple[bool, SylowWitness]:
    """Decide whether the Sylow ``l``-subgroups of ``g`` are cyclic.

    Let ``l^a`` be the ``l``-part of ``|g|``. A cyclic Sylow subgroup is
    generated by an element of order ``l^a``; conversely an element of
    order ``l^a`` generates a subgroup of Sylow order, which is a cyclic
    Sylow subgroup, and all Sylow subgroups are conjugate. So the Sylow
    subgroups are cyclic exactly when some element order is divisible by
    ``l^a``, and no subgroup needs to be built.
    """
    if l < 2 or any(l % p == 0 for p in range(2, math.isqrt(l) + 1)):
        raise ValueError(f"{l} is not prime")
    sylow = _prime_part(g.order, l)
    orders = g.orders
    part_of = {int(o): _prime_part(int(o), l) for o in np.unique(orders)}
    best_order = max(part_of, key=part_of.get)
    best_part = part_of[best_order]
    best = int(np.flatnonzero(orders == best_order)[0])
    w = g.elements[best]
    # reduce to an element of exact l-power order
    witness = _power(w, best_order // best_part)
    return best_part == sylow, SylowWitness(witness, best_part, sylow)
