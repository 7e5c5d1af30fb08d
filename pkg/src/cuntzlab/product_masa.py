"""Dynamics on the product masa C_{E,F}.

With X = s_1 s_2^* + s_2 s_1^*, the projections E = (1+X)/2 and
F = (1-X)/2 generate, together with their shifts theta^n(E), theta^n(F),
a masa of O_2 isomorphic to C(Cantor): the depth-m projections
P_q = q_1 theta(q_2) ... theta^{m-1}(q_m), q in {E,F}^m, are the cylinder
projections (E is identified with the letter 1, F with 2).

An endomorphism leaves C_{E,F} invariant when the images of E and F are
exact 0/1 sums of depth-k projection words and the shift-commutation
identity psi(theta^n(E)) = theta^n(psi(E)) holds; the induced map is then
the sliding block code whose local rule reads off which depth-k words
appear in psi(E)."""

from __future__ import annotations

import itertools
from typing import Dict, List, Tuple

import numpy as np

from .algebra import AlgebraElement
from .endomorphism import EndomorphismSpec, theta, theta_power
from .errors import MasaNotInvariantError
from .dynamics import JoinDynamics, BlockMapTable, DEFAULT_BUDGET, pack_word
from .parsing import parse_element
from .scalars import GaussianRational

EFWord = Tuple[int, ...]  # letters 1 (=E) and 2 (=F)


def swap_unitary(n_gens: int = 2) -> AlgebraElement:
    """X = s_1 s_2^* + s_2 s_1^*."""
    return parse_element("s[1] t[2] + s[2] t[1]", n_gens)


def ef_generators(n_gens: int = 2) -> Tuple[AlgebraElement, AlgebraElement]:
    """E = (1 + X)/2 and F = (1 - X)/2."""
    from fractions import Fraction

    x = swap_unitary(n_gens)
    half = Fraction(1, 2)
    one = AlgebraElement.one(n_gens)
    return (one + x).scaled(half), (one - x).scaled(half)


def ef_projection(word: EFWord, n_gens: int = 2) -> AlgebraElement:
    """P_q = q_1 theta(q_2) ... theta^{m-1}(q_m) for q over {1=E, 2=F}."""
    e, f = ef_generators(n_gens)
    out = AlgebraElement.one(n_gens)
    for pos, letter in enumerate(word):
        q = e if letter == 1 else f
        out = out * theta_power(pos, q)
    return out


class ProductMasaDynamics(JoinDynamics):
    """Sliding-block dynamics induced on C_{E,F} by an endomorphism.

    Construction verifies membership of psi(E), psi(F) in the depth-k
    projection-word span (exact coefficient extraction against the trace,
    then exact re-expression) and checks the shift-commutation identity
    symbolically up to `check_depth`; deeper tables extend the verified
    local rule structurally."""

    def __init__(self, endo: EndomorphismSpec, budget: int = DEFAULT_BUDGET,
                 check_depth: int = 6):
        if endo.n_gens != 2:
            raise MasaNotInvariantError("the E/F masa is defined for N = 2")
        super().__init__(2, max(endo.rank - 1, 0), budget)
        self.endo = endo
        self.check_depth = check_depth
        self.rule: Dict[EFWord, int] = {}
        self._extract_rule()
        self._verify_shift_commutation()

    def label(self) -> str:
        return self.endo.label()

    def masa_name(self) -> str:
        return "EF"

    # -- invariance and local rule -----------------------------------------

    def _expand(self, img: AlgebraElement, source: str) -> List[EFWord]:
        """Write `img` as an exact 0/1 combination of depth-k projection
        words; raise MasaNotInvariantError if impossible."""
        k = self.endo.rank
        support: List[EFWord] = []
        total = AlgebraElement.zero(2)
        for q in itertools.product((1, 2), repeat=k):
            p_q = ef_projection(q)
            weight = (img * p_q).trace_state()
            share = p_q.trace_state()
            coeff = weight / share
            if not coeff:
                continue
            if coeff != GaussianRational.of(1):
                raise MasaNotInvariantError(
                    f"psi({source}) has non-0/1 weight {coeff} on P_{q}")
            support.append(q)
            total = total + p_q
        if not total == img:
            raise MasaNotInvariantError(
                f"psi({source}) is not a sum of depth-{k} E/F projection words")
        return support

    def _extract_rule(self) -> None:
        e, f = ef_generators(2)
        support_e = self._expand(self.endo.apply(e), "E")
        support_f = self._expand(self.endo.apply(f), "F")
        if sorted(support_e + support_f) != sorted(
                itertools.product((1, 2), repeat=self.endo.rank)):
            raise MasaNotInvariantError(
                "images of E and F do not partition the depth-k cylinders")
        for q in support_e:
            self.rule[q] = 1
        for q in support_f:
            self.rule[q] = 2

    def _verify_shift_commutation(self) -> None:
        """Check psi(theta^n(E)) = theta^n(psi(E)) (and for F) up to
        check_depth, computing the left side by the homomorphism recursion
        psi(theta^n(x)) = sum_i psi(s_i) psi(theta^{n-1}(x)) psi(s_i)^*."""
        imgs = [self.endo.apply(AlgebraElement.generator(2, i)) for i in (1, 2)]
        for gen in ef_generators(2):
            lhs = self.endo.apply(gen)
            rhs = lhs
            for _ in range(self.check_depth):
                lhs = imgs[0] * lhs * imgs[0].adjoint() + imgs[1] * lhs * imgs[1].adjoint()
                rhs = theta(rhs)
                if not lhs == rhs:
                    raise MasaNotInvariantError(
                        "shift-commutation identity fails on C_{E,F}")

    # -- tables -------------------------------------------------------------

    def _build_table(self, p: int) -> BlockMapTable:
        """Pure sliding code: output letter j is rule[w_j .. w_{j+k-1}]."""
        k = self.endo.rank
        window = p + self.step
        self._check_budget(window)
        rule_arr = np.zeros(2 ** k, dtype=np.int64)
        for q, letter in self.rule.items():
            rule_arr[pack_word(q, 2)] = letter - 1
        codes = np.arange(2 ** window, dtype=np.int64)
        out = np.zeros(2 ** window, dtype=np.int64)
        for j in range(p):
            shiftpow = 2 ** (window - j - k)
            chunk = (codes // shiftpow) % (2 ** k)
            out = out * 2 + rule_arr[chunk]
        return BlockMapTable(2, p, window, out)
