"""Exact orthogonal-polynomial chain sequences, kernels and perturbations.

Rational values are accepted as int, str ("5/2") or Fraction and returned as
Fraction. Polynomials are coefficient lists in ascending degree.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import _opchain
from ._opchain import OpchainError

__all__ = [
    "OpchainError",
    "family",
    "laguerre_gamma",
    "monic",
    "recover_gamma",
    "perturb",
    "minimal_parameters",
    "zeros",
    "lu",
    "moments",
    "verify",
]

Number = int | str | Fraction


def _s(xs: Iterable[Number]) -> list[str]:
    return [str(Fraction(x)) for x in xs]


def _f(xs: Iterable[str]) -> list[Fraction]:
    return [Fraction(x) for x in xs]


def family(name: str, param: Number, n: int) -> tuple[list[Fraction], list[Fraction]]:
    """(b_1..b_n, a_1^2..a_{n-1}^2) of a named family."""
    b, a2 = _opchain.family(name, str(Fraction(param)), n)
    return _f(b), _f(a2)


def laguerre_gamma(alpha: Number, gamma1: Number, last: int) -> list[Fraction]:
    return _f(_opchain.family_gamma(str(Fraction(alpha)), str(Fraction(gamma1)), last))


def monic(b: Sequence[Number], a2: Sequence[Number], n: int) -> list[list[Fraction]]:
    return [_f(p) for p in _opchain.monic(_s(b), _s(a2), n)]


def recover_gamma(b: Sequence[Number], a2: Sequence[Number], gamma1: Number, last: int) -> list[Fraction]:
    return _f(_opchain.recover_gamma(_s(b), _s(a2), str(Fraction(gamma1)), last))


def perturb(gamma: Sequence[Number], variant: str, n: int) -> list[list[Fraction]]:
    """P_0..P_n of tilde, hat, tilde_kernel, kernel, split, q, u, unified_p or unified_k."""
    return [_f(p) for p in _opchain.perturb(_s(gamma), variant, n)]


def minimal_parameters(d: Sequence[Number], n: int) -> list[Fraction]:
    return _f(_opchain.minimal_parameters(_s(d), n))


def zeros(b: Sequence[Number], a2: Sequence[Number], n: int, tol: float = 1e-12) -> list[float]:
    return _opchain.zeros(_s(b), _s(a2), n, tol)


def lu(b: Sequence[Number], a2: Sequence[Number], n: int, gamma1: Number = 0) -> tuple[list[Fraction], list[Fraction]]:
    """(L subdiagonal, U diagonal) with J - gamma1 e1 e1^T = L U."""
    l_sub, u_diag = _opchain.lu(_s(b), _s(a2), n, str(Fraction(gamma1)))
    return _f(l_sub), _f(u_diag)


def moments(b: Sequence[Number], a2: Sequence[Number], k: int) -> list[Fraction]:
    """mu_0/mu_0 .. mu_k/mu_0."""
    return _f(_opchain.moments(_s(b), _s(a2), k))


def verify(suite: str = "all", n: int = 10, seed: int = 1, samples: int = 25, corrupt: Optional[int] = None) -> dict:
    return json.loads(_opchain.verify(suite, n, seed, samples, corrupt))
