"""Seeded random elements for the randomized suites.

All suites draw from ``random.Random(seed)`` so every run is reproducible;
the CLI exposes the seed and sample count.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exactnum import ExpPoly, GaussianRational, MultiPoly
from .freealg import NCPoly
from .freelie import Decomposed, slot_vars
from .presentations import AqElement, QPlaneElement


def fraction(rng: random.Random, lo=-5, hi=5, max_den=3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def nonzero_fraction(rng: random.Random, lo=-5, hi=5, max_den=3) -> Fraction:
    while True:
        f = fraction(rng, lo, hi, max_den)
        if f:
            return f


def nonzero_q(rng: random.Random) -> Fraction:
    while True:
        f = fraction(rng, -4, 4, 3)
        if f and f != 1:
            return f


def word(rng: random.Random, gens, max_len: int):
    return tuple(rng.choice(gens) for _ in range(rng.randint(0, max_len)))


def ncpoly(rng: random.Random, gens, max_len=4, max_terms=3,
           allow_zero=True) -> NCPoly:
    gens = list(gens)
    terms = {}
    for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
        w = word(rng, gens, max_len)
        terms[w] = terms.get(w, Fraction(0)) + fraction(rng)
    return NCPoly(terms)


def multipoly(rng: random.Random, vars, max_deg=3, max_terms=3) -> MultiPoly:
    vars = tuple(vars)
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        expo = [0] * len(vars)
        budget = rng.randint(0, max_deg)
        for _ in range(budget):
            if vars:
                expo[rng.randrange(len(vars))] += 1
        key = tuple(expo)
        terms[key] = terms.get(key, Fraction(0)) + fraction(rng)
    return MultiPoly(vars, terms)


def exppoly(rng: random.Random, max_k=4, max_d=5, max_terms=4) -> ExpPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        k = rng.randint(0, max_k)
        d = Fraction(rng.randint(-max_d, max_d))
        c = GaussianRational(fraction(rng), fraction(rng))
        key = (k, d)
        terms[key] = terms.get(key, GaussianRational(0)) + c
    return ExpPoly(terms)


def qplane_element(rng: random.Random, max_row=3, max_deg=3) -> QPlaneElement:
    rows = {}
    for j in range(max_row + 1):
        if rng.random() < 0.4:
            continue
        c = fraction(rng)
        f = {}
        g = {}
        for deg in range(1, max_deg + 1):
            if rng.random() < 0.5:
                f[deg] = fraction(rng)
            if rng.random() < 0.5:
                g[deg] = fraction(rng)
        rows[j] = (c,
                   MultiPoly(("x",), {(d,): v for d, v in f.items()}),
                   MultiPoly(("y",), {(d,): v for d, v in g.items()}))
    return QPlaneElement(rows)


def aq_element(rng: random.Random, max_a=2, max_bc=3,
               max_terms=4) -> AqElement:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        i = rng.randint(-max_a, max_a)
        j = rng.randint(0, max_bc)
        k = rng.randint(0, max_bc - j)
        key = (i, j, k)
        terms[key] = terms.get(key, Fraction(0)) + fraction(rng)
    return AqElement(terms)


def decomposed(rng: random.Random, max_slot=2, max_deg=2,
               max_terms=2, slot=None) -> Decomposed:
    """Random decomposed element; fix ``slot`` to load a single slot."""
    slots = {}
    targets = [slot] if slot is not None else range(max_slot + 1)
    for m in targets:
        if slot is None and rng.random() < 0.3:
            continue
        h = multipoly(rng, slot_vars(m), max_deg, max_terms)
        if h:
            slots[m] = h
    return Decomposed(slots)
