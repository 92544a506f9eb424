from dataclasses import replace

import pytest

from golden import BLOCKS, CP, D2, SUB_A, SUB_B, SUP_A, SUP_B, as_rows
from kronsub.completion import (CompletionResult, assemble, complete, complete_rm, is_subpencil_cm,
                                is_subpencil_rm, verify_completion, verify_completion_rm)
from kronsub.errors import NotSubpencil, ShapeMismatch
from kronsub.exactmat import GF, QQ, Matrix
from kronsub.kroncore import PreinjInvariants as I
from kronsub.pencil import Pencil, pencil_of_module, scramble

SUB = Pencil(Matrix(QQ, as_rows(SUB_A)), Matrix(QQ, as_rows(SUB_B)))
SUP = Pencil(Matrix(QQ, as_rows(SUP_A)), Matrix(QQ, as_rows(SUP_B)))


def M(rows):
    return Matrix(QQ, as_rows(rows))


def printed_result():
    w = is_subpencil_cm(SUB, SUP)
    return CompletionResult(**{k: M(v) for k, v in BLOCKS.items()}, left=M(D2), right=M(CP), linking=w)


def test_worked_decision():
    w = is_subpencil_cm(SUB, SUP)
    assert w.b_seq == (2, 1, 2, 1, 0, 0) and w.linking == I((2, 1, 2, 1))


def test_worked_completion_shapes():
    r = complete(SUB, SUP)
    assert r.A12.shape == (8, 2) and r.A21.shape == (2, 12) and r.A22.shape == (2, 2)
    assert verify_completion(SUB, SUP, r)


def test_printed_blocks_verify():
    r = printed_result()
    assert verify_completion(SUB, SUP, r)
    # the printed blocks are exactly the top-left-framed transform of the 10x14 pencil
    X = SUP.transform(r.left, r.right)
    assert X == assemble(SUB, r)


def test_perturbed_blocks_fail():
    r = printed_result()
    bad = replace(r, A12=r.A12.with_entry(0, 0, 1))
    assert not verify_completion(SUB, SUP, bad)


def test_wrong_block_shape_raises():
    r = printed_result()
    with pytest.raises(ShapeMismatch):
        verify_completion(SUB, SUP, replace(r, A22=Matrix.zeros(QQ, 3, 2)))


def test_sub_equal_to_sup():
    r = complete(SUP, SUP)
    assert r.A12.shape == (10, 0) and r.A21.shape == (0, 14)
    assert verify_completion(SUP, SUP, r)


def test_zero_columns_inside_L1():
    sub, sup = pencil_of_module(I((1,))), pencil_of_module(I((0, 1)))
    assert sub.shape == (0, 1) and sup.shape == (1, 2)
    r = complete(sub, sup)
    assert verify_completion(sub, sup, r)


def test_negative_example():
    sub, sup = pencil_of_module(I((0, 0, 2))), pencil_of_module(I((0, 1, 0, 1)))
    assert is_subpencil_cm(sub, sup) is None
    with pytest.raises(NotSubpencil):
        complete(sub, sup)


@pytest.mark.parametrize("field", [QQ, GF(5), GF(2)], ids=["Q", "GF5", "GF2"])
def test_scrambled_inputs(field):
    sub = scramble(pencil_of_module(I((1, 1, 1, 0, 0, 1)), field), 1)
    sup = scramble(pencil_of_module(I((0, 1, 0, 3)), field), 2)
    r = complete(sub, sup, seed=5)
    assert verify_completion(sub, sup, r)


def test_mixed_fields_rejected():
    with pytest.raises(ShapeMismatch):
        is_subpencil_cm(SUB, pencil_of_module(I((0, 1, 0, 3)), GF(5)))


def test_row_minimal_mirror():
    sub, sup = SUB.T, scramble(SUP, 4).T
    w = is_subpencil_rm(sub, sup)
    assert w.b_seq == (2, 1, 2, 1, 0, 0)
    r = complete_rm(sub, sup)
    assert (r.A12.shape, r.A21.shape) == ((12, 2), (2, 8))
    assert verify_completion_rm(sub, sup, r)
    assert r.transpose().transpose() == r
