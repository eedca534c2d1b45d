import numpy as np
import pytest

from freqrect.designs import ShapeError, validate_hadamard, validate_oa
from freqrect.gf import FieldError
from freqrect.hadamard import (
    build,
    full_factorial_oa,
    hadamard_to_oa,
    kronecker,
    normalize,
    paley_I,
    sylvester,
)
from freqrect.verify import pair_counts


def test_sylvester_small():
    assert np.array_equal(sylvester(1).entries, [[1, 1], [1, -1]])
    assert sylvester(0).order == 1
    assert sylvester(2).order == 4
    assert sylvester(3).order == 8
    with pytest.raises(ShapeError):
        sylvester(-1)


def test_sylvester_to_oa():
    oa = hadamard_to_oa(sylvester(3))
    assert (oa.runs, oa.factors, oa.q, oa.strength) == (8, 7, 2, 2)


def test_paley():
    assert paley_I(3).order == 4
    assert paley_I(11).order == 12
    assert paley_I(19).order == 20
    with pytest.raises(FieldError):
        paley_I(5)  # 5 = 1 (mod 4)
    with pytest.raises(FieldError):
        paley_I(15)  # composite


def test_kronecker():
    h2 = sylvester(1)
    assert kronecker(h2, h2) == sylvester(2)
    assert kronecker(h2, paley_I(11)).order == 24
    x = paley_I(3)
    assert kronecker(sylvester(0), x) == x


def test_normalize():
    h = sylvester(2)
    assert normalize(h) == h  # already normalized
    flipped = validate_hadamard(h.entries * np.where(np.arange(4) == 1, -1, 1)[:, None])
    renorm = normalize(flipped)
    assert np.all(renorm.entries[0] == 1) and np.all(renorm.entries[:, 0] == 1)
    assert normalize(renorm) == renorm  # idempotent


def test_normalized_row_balance():
    h = normalize(paley_I(11))
    n = h.order
    for i in range(1, n):
        assert int((h.entries[i] == 1).sum()) == n // 2
    # any two non-first rows superimpose to n/4 of each ordered pair
    a = (h.entries[1] + 1) // 2
    b = (h.entries[2] + 1) // 2
    t = pair_counts(a.reshape(1, -1), b.reshape(1, -1), q=2)
    assert np.all(t.counts == n // 4)


def test_hadamard_to_oa():
    oa = hadamard_to_oa(sylvester(2))
    assert (oa.runs, oa.factors) == (4, 3)
    assert np.all(oa.rows.sum(axis=0) == 2)  # each column balanced
    oa12 = hadamard_to_oa(paley_I(11))
    assert (oa12.runs, oa12.factors) == (12, 11)
    with pytest.raises(ShapeError):
        hadamard_to_oa(sylvester(1))


def test_build_order_resolution():
    for order in (1, 2, 4, 8, 12, 16, 20, 24, 48):
        assert build(order).order == order
    with pytest.raises(ShapeError):
        build(6)
    with pytest.raises(ShapeError):
        build(92)  # outside the constructive reach of these generators


def test_full_factorial_oa():
    oa = full_factorial_oa(2)
    assert oa.rows.tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]
    oa3 = full_factorial_oa(3, parity=True)
    assert (oa3.runs, oa3.factors, oa3.strength) == (8, 4, 3)
    validate_oa(oa3.rows, 2, 3)
    oa1 = full_factorial_oa(1)
    assert (oa1.runs, oa1.factors, oa1.strength) == (2, 1, 1)
    with pytest.raises(ShapeError):
        full_factorial_oa(0)
