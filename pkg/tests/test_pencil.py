import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from golden import LINK_A, LINK_B, SUB_A, SUB_B, SUP_A, SUP_B, as_rows
from kronsub.errors import NotColumnMinimalOnly, ShapeMismatch
from kronsub.exactmat import GF, QQ, Matrix, invert, rank
from kronsub.kroncore import PreinjInvariants as I, enumerate_invariants
from kronsub.pencil import (Pencil, canonical_transform, check_canonical_transform, minimal_column_indices,
                            nu_sequence, pencil_of_module, scramble, scramble_with_transforms,
                            strictly_equivalent_cm, toeplitz)

SUB = Pencil(Matrix(QQ, as_rows(SUB_A)), Matrix(QQ, as_rows(SUB_B)))
SUP = Pencil(Matrix(QQ, as_rows(SUP_A)), Matrix(QQ, as_rows(SUP_B)))

small = st.lists(st.integers(0, 2), max_size=4).map(I)
fields = st.sampled_from([QQ, GF(5), GF(2)])


def test_single_block():
    P = pencil_of_module(I((0, 0, 1)))
    assert P.A == Matrix(QQ, [[0, 1, 0], [0, 0, 1]])
    assert P.B == Matrix(QQ, [[1, 0, 0], [0, 1, 0]])
    assert pencil_of_module(I((1,))).shape == (0, 1)


def test_worked_pencils_are_canonical():
    assert pencil_of_module(I((1, 1, 1, 0, 0, 1))) == SUB
    assert pencil_of_module(I((0, 1, 0, 3))) == SUP
    assert pencil_of_module(I((2, 1, 2, 1))) == Pencil(Matrix(QQ, as_rows(LINK_A)), Matrix(QQ, as_rows(LINK_B)))


def test_worked_indices():
    assert sorted(minimal_column_indices(SUB).epsilons()) == [0, 1, 2, 5]
    assert sorted(minimal_column_indices(SUP).epsilons()) == [1, 3, 3, 3]


def test_nu_of_single_block():
    # nu_0..nu_4; L_2 has one kernel vector, of degree 2
    assert nu_sequence(pencil_of_module(I((0, 0, 1))), 4) == [0, 0, 0, 1, 2]


def test_toeplitz_shape():
    T = toeplitz(SUB, 3)
    assert T.shape == (8 * 4, 12 * 3)


def test_regular_part_is_rejected():
    lam = Pencil(Matrix(QQ, [[0]]), Matrix(QQ, [[1]]))
    with pytest.raises(NotColumnMinimalOnly):
        minimal_column_indices(lam)
    tall = Pencil(Matrix.zeros(QQ, 2, 1), Matrix.zeros(QQ, 2, 1))
    with pytest.raises(NotColumnMinimalOnly):
        minimal_column_indices(tall)


def test_empty_rows():
    P = Pencil(Matrix.zeros(QQ, 0, 3), Matrix.zeros(QQ, 0, 3))
    assert minimal_column_indices(P) == I((3,))


def test_strict_equivalence_examples():
    assert strictly_equivalent_cm(SUP, scramble(SUP, 7))
    assert not strictly_equivalent_cm(pencil_of_module(I((0, 2))), pencil_of_module(I((1, 0, 1))))
    with pytest.raises(ShapeMismatch):
        strictly_equivalent_cm(SUP, pencil_of_module(I((0, 1, 0, 3)), GF(5)))


def test_round_trip_bounded():
    for field in (QQ, GF(5)):
        for inv in enumerate_invariants(4, 3):
            assert minimal_column_indices(pencil_of_module(inv, field)) == inv


@pytest.mark.parametrize("field", [QQ, GF(5)], ids=["Q", "GF5"])
def test_scramble_preserves_indices(field):
    for seed in range(10):
        P = pencil_of_module(I((1, 1, 1, 0, 0, 1)), field)
        S, Pl, Qr = scramble_with_transforms(P, seed)
        assert S == P.transform(Pl, Qr)
        assert minimal_column_indices(S) == I((1, 1, 1, 0, 0, 1))


def test_canonical_transform_worked():
    S = scramble(SUP, 3)
    inv, Pl, Qr = canonical_transform(S)
    assert inv == I((0, 1, 0, 3))
    assert S.transform(Pl, Qr) == SUP
    assert check_canonical_transform(S, inv, Pl, Qr)


def test_canonical_transform_identity_on_canonical():
    inv, Pl, Qr = canonical_transform(SUB)
    assert Pl == Matrix.identity(QQ, 8) and Qr == Matrix.identity(QQ, 12)


@settings(max_examples=60, deadline=None)
@given(small, fields, st.integers(0, 10**6))
def test_scrambled_canonical_transform(inv, field, seed):
    S = scramble(pencil_of_module(inv, field), seed)
    got, Pl, Qr = canonical_transform(S)
    assert got == inv
    assert rank(Pl) == Pl.rows and rank(Qr) == Qr.rows
    assert S.transform(Pl, Qr) == pencil_of_module(inv, field)


@settings(max_examples=60, deadline=None)
@given(small, fields, st.integers(0, 10**6))
def test_nu_increments_are_monotone(inv, field, seed):
    S = scramble(pencil_of_module(inv, field), seed)
    m, n = S.shape
    nu = nu_sequence(S, m + 2)
    steps = [b - a for a, b in zip([0] + nu, nu)]
    assert all(x <= y for x, y in zip(steps, steps[1:]))
    assert steps[-1] == n - m


@settings(max_examples=60, deadline=None)
@given(small, small)
def test_direct_sum_adds_indices(a, b):
    P, Q = pencil_of_module(a), pencil_of_module(b)
    f = QQ
    A = Matrix.block_diag(f, [P.A, Q.A])
    B = Matrix.block_diag(f, [P.B, Q.B])
    assert minimal_column_indices(Pencil(A, B)) == a + b


def test_transform_inverse():
    S, Pl, Qr = scramble_with_transforms(SUB, 11)
    assert S.transform(invert(Pl), invert(Qr)) == SUB


def _toeplitz_indices(P):
    m, n = P.shape
    nu = nu_sequence(P, m + 1)
    for k in range(1, len(nu)):
        if nu[k] - nu[k - 1] >= n - m:
            nu = nu[:k + 1]
            break
    ext = [0] + nu
    mult = [ext[e + 2] - 2 * ext[e + 1] + ext[e] for e in range(len(nu) - 1)]
    if any(x < 0 for x in mult) or sum(mult) != n - m or sum(e * x for e, x in enumerate(mult)) != m:
        return None
    return I(mult)


@st.composite
def raw_pencils(draw):
    f = draw(fields)
    m = draw(st.integers(1, 4))
    n = draw(st.integers(m, 6))
    ent = st.integers(-1, 2)
    A = draw(st.lists(st.lists(ent, min_size=n, max_size=n), min_size=m, max_size=m))
    B = draw(st.lists(st.lists(ent, min_size=n, max_size=n), min_size=m, max_size=m))
    return Pencil(Matrix(f, A), Matrix(f, B))


@settings(max_examples=300, deadline=None)
@given(raw_pencils())
def test_subspace_walk_matches_toeplitz_ranks(P):
    want = _toeplitz_indices(P)
    if want is None:
        with pytest.raises(NotColumnMinimalOnly):
            minimal_column_indices(P)
    else:
        assert minimal_column_indices(P) == want
