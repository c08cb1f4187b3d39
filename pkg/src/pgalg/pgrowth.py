"""Exact growth certificates for upper triangular rational matrices.

For triangular T the matrix ``X(s) = e^{isT}`` has exponential-polynomial
entries, computed exactly by back-substitution on ``X' = iTX, X(0) = I``.
The growth degree is the maximal s-power across the entries; it is bounded
by size-1 and vanishes exactly in the resonance-free diagonalizable cases.

The module also carries the desk-scale radical checks (commutators of
triangular matrices are strictly upper and nilpotent, q-commuting pairs
have nilpotent product) and the rigidity check that a one-sided inverse of
a triangular matrix is two-sided.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import ExpPoly, GaussianRational
from .matrep import TriMatrix, emat, kmat


def exp_is(t: TriMatrix):
    """Entries of e^{isT} as exponential polynomials (nested lists).

    Diagonal entries are e^{i t_jj s}; the entry (i, j) above the diagonal
    solves X'_{ij} = i * sum_k T_{ik} X_{kj} with X_{ij}(0) = 0, integrated
    exactly.  Equal diagonal frequencies (resonance) raise the s-power.
    """
    p = t.size
    diag = [Fraction(t.entry(i, i)) for i in range(p)]
    x = [[ExpPoly.zero() for _ in range(p)] for _ in range(p)]
    for i in range(p):
        x[i][i] = ExpPoly.term(1, 0, diag[i])
    for width in range(1, p):
        for i in range(p - width):
            j = i + width
            known = ExpPoly.zero()
            for k in range(i + 1, j + 1):
                coeff = Fraction(t.entry(i, k))
                if coeff:
                    known = known + x[k][j] * GaussianRational(0, coeff)
            if not known:
                continue
            # strip the diagonal frequency, integrate, put it back
            shift_down = ExpPoly.term(1, 0, -diag[i])
            shift_up = ExpPoly.term(1, 0, diag[i])
            x[i][j] = shift_up * (shift_down * known).antiderivative()
    return x


def expmatrix_mul(a, b):
    p = len(a)
    out = [[ExpPoly.zero() for _ in range(p)] for _ in range(p)]
    for i in range(p):
        for k in range(p):
            if not a[i][k]:
                continue
            for j in range(p):
                if b[k][j]:
                    out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def expmatrix_is_identity(x) -> bool:
    p = len(x)
    one = ExpPoly.one()
    for i in range(p):
        for j in range(p):
            want = one if i == j else ExpPoly.zero()
            if x[i][j] != want:
                return False
    return True


def expmatrix_reflect(x):
    return [[e.reflect() for e in row] for row in x]


def expmatrix_derivative(x):
    return [[e.derivative() for e in row] for row in x]


@dataclass(frozen=True)
class GrowthCertificate:
    size: int
    degree: int
    witness: tuple  # rows of e^{isT}

    def __post_init__(self):
        if not 0 <= self.degree <= self.size - 1:
            raise ValueError("degree must satisfy 0 <= degree <= size - 1")


def growth_degree(t: TriMatrix) -> int:
    """Maximal s-power in e^{isT}; always at most size - 1."""
    x = exp_is(t)
    return max(
        (e.max_power() for row in x for e in row if e), default=0
    )


def certify(t: TriMatrix) -> GrowthCertificate:
    x = exp_is(t)
    degree = max((e.max_power() for row in x for e in row if e), default=0)
    return GrowthCertificate(
        t.size, degree, tuple(tuple(row) for row in x)
    )


# -- random triangular matrices -------------------------------------------------


def random_fraction(rng: random.Random, lo=-5, hi=5, max_den=3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_upper(rng: random.Random, p: int, lo=-5, hi=5,
                 max_den=3) -> TriMatrix:
    rows = [[Fraction(0)] * p for _ in range(p)]
    for i in range(p):
        for j in range(i, p):
            rows[i][j] = random_fraction(rng, lo, hi, max_den)
    return TriMatrix(rows)


def random_invertible_upper(rng: random.Random, p: int) -> TriMatrix:
    while True:
        m = random_upper(rng, p)
        if all(m.entry(i, i) for i in range(p)):
            return m


def invert_upper(m: TriMatrix) -> TriMatrix:
    """Exact inverse by back substitution; diagonal must be nonzero."""
    p = m.size
    rows = [[Fraction(0)] * p for _ in range(p)]
    for i in range(p):
        d = m.entry(i, i)
        if not d:
            raise ZeroDivisionError("zero diagonal entry")
        rows[i][i] = Fraction(1) / Fraction(d)
    for width in range(1, p):
        for i in range(p - width):
            j = i + width
            acc = Fraction(0)
            for k in range(i + 1, j + 1):
                acc += Fraction(m.entry(i, k)) * rows[k][j]
            rows[i][j] = -acc / Fraction(m.entry(i, i))
    return TriMatrix(rows)


# -- radical structure ------------------------------------------------------------


@dataclass
class RadicalReport:
    size: int
    samples: int
    seed: int
    commutator_strict: int = 0
    commutator_nilpotent: int = 0
    q_pairs: int = 0
    q_product_nilpotent: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        lines = [
            f"size p = {self.size}, samples = {self.samples}, "
            f"seed = {self.seed}",
            f"commutators strictly upper: {self.commutator_strict}"
            f"/{self.samples}",
            f"commutators nilpotent (power p): {self.commutator_nilpotent}"
            f"/{self.samples}",
            f"q-commuting products nilpotent: {self.q_product_nilpotent}"
            f"/{self.q_pairs}",
        ]
        lines.extend(f"FAILURE: {f}" for f in self.failures)
        return "\n".join(lines)


def _strictly_upper(m: TriMatrix) -> bool:
    return all(not m.entry(i, i) for i in range(m.size))


def radical_report(p: int, samples: int = 100, seed: int = 0) -> RadicalReport:
    """Random desk-scale checks of the radical structure of T_p.

    For random pairs (A, B): [A, B] is strictly upper triangular and
    [A, B]^p = 0.  For constructed q-commuting pairs (lam*K_p, mu*E_p) with
    random q not in {0, 1}: the product is nilpotent of index at most p.
    """
    if p < 1:
        raise ValueError("size must be at least 1")
    rng = random.Random(seed)
    report = RadicalReport(p, samples, seed)
    for n in range(samples):
        a = random_upper(rng, p)
        b = random_upper(rng, p)
        comm = a.commutator(b)
        if _strictly_upper(comm):
            report.commutator_strict += 1
        else:
            report.failures.append(f"sample {n}: commutator has a diagonal")
        if not (comm ** p):
            report.commutator_nilpotent += 1
        else:
            report.failures.append(f"sample {n}: commutator^{p} != 0")
        q = Fraction(0)
        while q in (0, 1):
            q = random_fraction(rng, -4, 4, 3)
        lam = Fraction(0)
        while not lam:
            lam = random_fraction(rng, -4, 4, 3)
        mu = Fraction(0)
        while not mu:
            mu = random_fraction(rng, -4, 4, 3)
        x = kmat(p, q).scale(lam)
        y = emat(p).scale(mu)
        if x * y != (y * x).scale(q):
            report.failures.append(f"sample {n}: pair is not q-commuting")
            continue
        report.q_pairs += 1
        if not ((x * y) ** p):
            report.q_product_nilpotent += 1
        else:
            report.failures.append(f"sample {n}: (xy)^{p} != 0")
    return report
