import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from freqrect.designs import ShapeError, VectorSet, validate_fr
from freqrect.gf import rank_exact
from freqrect.mofs2p import base_vector, build_A, build_L, shift
from freqrect.verify import (
    block_matrix_spectrum,
    build_incidence,
    expected_spectrum,
    incidence_rank,
    is_orthogonal_pair,
    is_t_independent,
    is_t_orthogonal,
    mofr_upper_bound,
    pair_counts,
    verify_gram,
    verify_spectrum,
)

from conftest import O_SET, W_SET


def test_pair_counts_self(table2_set):
    t = pair_counts(table2_set[0], table2_set[0])
    assert t[0, 0] == 8 and t[1, 1] == 8
    assert t[0, 1] == 0 and t[1, 0] == 0
    assert t.total == 16


def test_pair_counts_shift_vectors():
    v0 = np.array([base_vector(7).entries])
    v1 = np.array([shift(base_vector(7), 1).entries])
    assert pair_counts(v0, v1, q=2)[1, 0] == 1
    for i in range(1, 4):
        vi = np.array([shift(base_vector(7), i).entries])
        t = pair_counts(v0, vi, q=2)
        assert t[1, 0] == i and t[0, 1] == i


def test_pair_counts_alpha_arrays():
    t = pair_counts(build_A(7, 1).grid, build_A(7, 2).grid, q=2)
    assert t[1, 0] == 12 and t[0, 1] == 12
    assert t[0, 0] == 9 and t[1, 1] == 16


def test_pair_counts_shape_mismatch():
    with pytest.raises(ShapeError):
        pair_counts(np.zeros((2, 2), dtype=int), np.zeros((2, 3), dtype=int))


@given(st.integers(0, 2 ** 30))
def test_pair_counts_symmetry_and_marginals(seed):
    rng = np.random.default_rng(seed)
    q = int(rng.choice([2, 3]))
    a = rng.integers(0, q, size=(4, 6))
    b = rng.integers(0, q, size=(4, 6))
    t_ab = pair_counts(a, b, q=q)
    t_ba = pair_counts(b, a, q=q)
    assert np.array_equal(t_ab.counts, t_ba.counts.T)
    for x in range(q):
        assert t_ab.counts[x].sum() == int((a == x).sum())


def test_is_orthogonal_pair(table2_set):
    assert is_orthogonal_pair(table2_set[0], table2_set[1])
    assert pair_counts(table2_set[0], table2_set[1])[0, 1] == 4
    assert not is_orthogonal_pair(table2_set[0], table2_set[0])


def test_unrepaired_squares_near_miss():
    la, lb = build_L(5, 1), build_L(5, 2)
    assert not is_orthogonal_pair(la, lb)
    t = pair_counts(la, lb)
    assert t[1, 0] == 24 and t[0, 1] == 24
    assert t[0, 0] == 26 and t[1, 1] == 26


def test_orthogonal_pair_failure_counts():
    a = validate_fr([[0, 1], [1, 0]], 2)
    b = validate_fr([[1, 0], [0, 1]], 2)
    # every cell disagrees, so (0,0) never occurs and the pair fails
    assert not is_orthogonal_pair(a, b)
    assert pair_counts(a, b)[0, 0] == 0


def test_is_t_orthogonal_table2(table2_set):
    rep = is_t_orthogonal(table2_set, 3)
    assert rep.ok and rep.expected == 2
    rep4 = is_t_orthogonal(table2_set, 4)
    assert not rep4.ok
    assert rep4.subset == (0, 1, 2, 4)
    assert rep4.expected == 1
    # the superimposition of that subset skips every odd-weight tuple
    stack = np.stack([table2_set[i].cells for i in rep4.subset])
    codes = (stack[0] * 8 + stack[1] * 4 + stack[2] * 2 + stack[3]).ravel()
    counts = np.bincount(codes, minlength=16)
    odd = [c for c in range(16) if bin(c).count("1") % 2 == 1]
    assert all(counts[c] == 0 for c in odd)


def test_is_t_orthogonal_divisibility():
    # three 2x2 squares: mn = 4 but q^3 = 8, so t=3 is impossible outright
    fs3 = [validate_fr([[0, 1], [1, 0]], 2), validate_fr([[1, 0], [0, 1]], 2),
           validate_fr([[0, 1], [1, 0]], 2)]
    rep3 = is_t_orthogonal(fs3, 3)
    assert not rep3.ok and rep3.reason == "divisibility"


def test_is_t_orthogonal_single(table2_set):
    assert is_t_orthogonal([table2_set[0]], 1).ok


def test_t_orthogonality_downward_closed(table2_set):
    for t in (1, 2, 3):
        assert is_t_orthogonal(table2_set, t).ok


def test_is_t_independent():
    o = VectorSet(q=2, length=4, vectors=tuple(O_SET))
    w = VectorSet(q=2, length=4, vectors=tuple(W_SET))
    assert is_t_independent(o, 3).ok
    assert is_t_independent(w, 3).ok
    bad = VectorSet(q=2, length=2, vectors=((1, 0), (0, 1), (1, 1)))
    rep = is_t_independent(bad, 3)
    assert not rep.ok and rep.subset == (0, 1, 2)
    # vacuous below t
    assert is_t_independent(VectorSet(q=2, length=4, vectors=((1, 0, 0, 0),)), 3).ok


def test_mofr_upper_bound():
    assert mofr_upper_bound(4, 4, 2) == 9
    assert mofr_upper_bound(14, 14, 2) == 169
    assert mofr_upper_bound(2, 4, 2) == 3
    with pytest.raises(ShapeError):
        mofr_upper_bound(4, 4, 1)


def test_build_incidence_single():
    f = validate_fr([[0, 1], [1, 0]], 2)
    bundle = build_incidence([f])
    assert np.array_equal(bundle.H_blocks[0],
                          [[1, 0], [0, 1], [0, 1], [1, 0]])
    assert bundle.M.shape == (4, 2)


def test_incidence_column_sums(table2_set):
    bundle = build_incidence(table2_set)
    for h in bundle.H_blocks:
        assert np.all(h.sum(axis=0) == 8)  # mn/q
        assert np.all(h.sum(axis=1) == 1)


def test_incidence_rank(table2_set):
    assert incidence_rank(table2_set) == 7  # kq - k + 1


def test_verify_gram(table2_set):
    assert verify_gram(table2_set)
    bundle = build_incidence(table2_set)
    gram = bundle.M.T @ bundle.M
    assert gram[0, 0] == 8 and gram[0, 2] == 4
    assert verify_gram([table2_set[0]])  # k=1, diagonal block only


def test_verify_gram_fails_for_nonorthogonal(table2_set):
    assert not verify_gram([table2_set[0], table2_set[0]])


def test_block_matrix_spectrum():
    assert block_matrix_spectrum(3, 2, 4) == {11: 1, 3: 3}
    assert block_matrix_spectrum(2, 0, 2) == {2: 2}  # b=0 merges the values


def test_expected_spectrum_table2():
    spec = expected_spectrum(6, 4, 4, 2)
    assert spec == {48: 1, 0: 5, 8: 6}
    assert sum(spec.values()) == 12


def test_verify_spectrum(table2_set):
    assert verify_spectrum(table2_set)
    assert verify_spectrum([table2_set[0]])


def test_verify_spectrum_single_small():
    f = validate_fr([[0, 1], [1, 0]], 2)
    bundle = build_incidence([f])
    gram = bundle.M.T @ bundle.M
    assert np.array_equal(gram, 2 * np.eye(2, dtype=int))
    assert verify_spectrum([f])
    assert rank_exact(gram) == 2


def test_verify_spectrum_fails_for_nonorthogonal(table2_set):
    assert not verify_spectrum([table2_set[0], table2_set[0]])
