import itertools

import numpy as np
import pytest

from hecke_typer.f2forms import (
    F2QuadraticForm,
    build_form,
    direct_sum,
    hyperbolic_plane,
    isometry_group_order,
    witt_index,
    witt_index_from_zero_count,
    zero_count,
)


def brute_witt_index(f):
    """Largest k such that some k independent vectors span a totally singular subspace."""
    vecs = [np.array(v) for v in itertools.product((0, 1), repeat=f.dim) if any(v)]
    singular = [v for v in vecs if f(v) == 0]
    best = 0
    for k in range(1, f.dim + 1):
        found = False
        for combo in itertools.combinations(singular, k):
            span = {tuple(np.sum([c * v for c, v in zip(cs, combo)], axis=0) % 2)
                    for cs in itertools.product((0, 1), repeat=k)}
            if len(span) == 2**k and all(f(np.array(u)) == 0 for u in span):
                found = True
                break
        if not found:
            break
        best = k
    return best


def test_q_minus_4_values():
    q = build_form("Q_minus_4")
    assert q([1, 1, 0, 0]) == 1
    assert q([0, 0, 1, 0]) == 1
    assert q([0, 0, 0, 0]) == 0


def test_e8_form_on_simple_roots():
    e8 = build_form("E8_mod2")
    for i in range(8):
        x = np.zeros(8, dtype=int)
        x[i] = 1
        assert e8(x) == 1
    assert e8(np.zeros(8, dtype=int)) == 0


def test_e8_form_matches_lattice_norm():
    from hecke_typer.coxeter import cartan_matrix
    from hecke_typer.weyl import IrreducibleType

    gram = cartan_matrix(IrreducibleType("E", 8))
    e8 = build_form("E8_mod2")
    rng = np.random.default_rng(5)
    for _ in range(200):
        x = rng.integers(-3, 4, size=8)
        assert e8(x % 2) == (x @ gram @ x // 2) % 2


def test_polar_form_is_bilinear():
    f = build_form("E8_mod2")
    rng = np.random.default_rng(0)
    for _ in range(100):
        x, y, z = rng.integers(0, 2, size=(3, 8))
        assert f.polar(x, y) == (f((x + y) % 2) + f(x) + f(y)) % 2
        assert f.polar((x + z) % 2, y) == (f.polar(x, y) + f.polar(z, y)) % 2


def test_zero_counts():
    assert zero_count(build_form("E8_mod2")) == 136 == 2**7 + 2**3
    assert zero_count(build_form("Q_minus_4")) == 6 == 2**3 - 2
    assert zero_count(F2QuadraticForm(1, ((0,),))) == 2


def test_direct_sum_dims_and_zero_counts():
    q = build_form("Q_minus_4")
    h = hyperbolic_plane()
    s = direct_sum(q, h)
    assert s.dim == 6
    zq, zh = zero_count(q), zero_count(h)
    # zeros of q1 + q2 pair zeros with zeros and ones with ones
    assert zero_count(s) == zq * zh + (16 - zq) * (4 - zh)


def test_witt_indices():
    q = build_form("Q_minus_4")
    assert witt_index(build_form("E8_mod2")) == 4
    assert witt_index(direct_sum(q, q)) == 4
    assert witt_index(q) == 1
    assert witt_index(hyperbolic_plane()) == 1
    assert witt_index(F2QuadraticForm(1, ((0,),))) == 1
    assert witt_index(F2QuadraticForm(1, ((1,),))) == 0


def test_witt_index_matches_zero_count_on_random_nondegenerate_forms():
    rng = np.random.default_rng(11)
    seen = 0
    while seen < 200:
        n = int(rng.choice([2, 4, 6, 8, 10]))
        f = F2QuadraticForm.from_matrix(rng.integers(0, 2, (n, n)))
        if not f.is_nondegenerate():
            continue
        seen += 1
        assert witt_index(f) == witt_index_from_zero_count(f)


def test_witt_index_matches_subspace_search_including_degenerate():
    rng = np.random.default_rng(3)
    for _ in range(60):
        n = int(rng.integers(1, 6))
        f = F2QuadraticForm.from_matrix(rng.integers(0, 2, (n, n)))
        assert witt_index(f) == brute_witt_index(f)


def test_zero_count_classifier_rejects_degenerate():
    with pytest.raises(ValueError):
        witt_index_from_zero_count(F2QuadraticForm(1, ((1,),)))


def test_orthogonal_group_of_minus_form():
    order, census = isometry_group_order(build_form("Q_minus_4"))
    assert order == 120
    assert census[5] == 24
    assert sum(census.values()) == order


def test_unknown_kind():
    with pytest.raises(ValueError):
        build_form("E7_mod2")
