"""Seeded random element generators shared by tests and the verify CLI."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .algebra import AlgebraElement, Monomial
from .scalars import GaussianRational


def random_scalar(rng: random.Random, span: int = 3) -> GaussianRational:
    """Nonzero Gaussian rational with small numerators/denominators."""
    while True:
        re = Fraction(rng.randint(-span, span), rng.randint(1, span))
        im = Fraction(rng.randint(-span, span), rng.randint(1, span))
        if rng.random() < 0.5:
            im = Fraction(0)
        s = GaussianRational(re, im)
        if s:
            return s


def random_word(rng: random.Random, n_gens: int, max_len: int,
                exact_len: Optional[int] = None):
    length = exact_len if exact_len is not None else rng.randint(0, max_len)
    return tuple(rng.randint(1, n_gens) for _ in range(length))


def random_element(rng: random.Random, n_gens: int = 2, max_terms: int = 6,
                   max_len: int = 4) -> AlgebraElement:
    """Random sparse element with words up to max_len."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = Monomial(random_word(rng, n_gens, max_len),
                        random_word(rng, n_gens, max_len))
        terms[mono] = random_scalar(rng)
    return AlgebraElement(n_gens, terms)


def random_homogeneous(rng: random.Random, n_gens: int, p: int, l: int,
                       max_terms: int = 5) -> AlgebraElement:
    """Random nonzero element of F_{p,l} (every term of bidegree (p, l))."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            mono = Monomial(random_word(rng, n_gens, p, exact_len=p),
                            random_word(rng, n_gens, l, exact_len=l))
            terms[mono] = random_scalar(rng)
        elem = AlgebraElement(n_gens, terms)
        if not elem.is_zero():
            return elem
