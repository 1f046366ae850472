from fractions import Fraction as F
import math

import pytest

import opchain


def test_laguerre_family_and_gamma():
    b, a2 = opchain.family("laguerre", 0, 4)
    assert b == [1, 3, 5, 7]
    assert a2 == [1, 4, 9]
    assert opchain.recover_gamma(b, a2, 0, 8) == [0, 1, 1, 2, 2, 3, 3, 4]
    assert opchain.laguerre_gamma(F(1, 2), 1, 4) == [1, F(3, 2), 2, F(5, 2)]


def test_e_family_half():
    b, a2 = opchain.family("e_family", "1/2", 2)
    assert b == [F(5, 2), F(9, 2)]
    assert a2 == [3]


def test_perturbations():
    assert opchain.perturb([1, 2, 3, 4], "tilde", 2)[2] == [3, -8, 1]
    assert opchain.perturb([1, 2, 3, 4], "hat", 2)[2] == [17, -10, 1]
    assert opchain.perturb([1, 2, 3, 4, 5, 6], "tilde_kernel", 1)[1] == [-5, 1]
    with pytest.raises(opchain.OpchainError, match="Gamma1Zero"):
        opchain.perturb([0, 2, 3, 4], "tilde", 2)


def test_minimal_parameters():
    assert opchain.minimal_parameters([F(1, 4)] * 3, 3) == [0, F(1, 4), F(1, 3), F(3, 8)]
    with pytest.raises(opchain.OpchainError, match="NotAChainSequence"):
        opchain.minimal_parameters([2], 1)


def test_zeros_lu_moments():
    z = opchain.zeros([1, 3], [1], 2)
    assert math.isclose(z[0], 2 - math.sqrt(2), abs_tol=1e-10)
    assert math.isclose(z[1], 2 + math.sqrt(2), abs_tol=1e-10)
    assert opchain.lu([1, 3, 5], [1, 4], 3) == ([1, 2], [1, 2, 3])
    b, a2 = opchain.family("laguerre", 0, 6)
    assert opchain.moments(b, a2, 5) == [1, 1, 2, 6, 24, 120]


def test_routh_romanovski_window():
    b, _ = opchain.family("routh_romanovski", 10, 4)
    assert b == [F(1, 8), F(5, 24), F(5, 12), F(5, 4)]
    with pytest.raises(opchain.OpchainError, match="StreamExhausted"):
        opchain.family("routh_romanovski", 10, 5)


def test_verify():
    assert opchain.verify(n=6, samples=3)["status"] == "pass"
    assert opchain.verify(suite="lu", n=6, samples=3, corrupt=3)["status"] == "fail"
