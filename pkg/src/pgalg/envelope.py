"""Truncated models of the envelope algebras.

Each of the three presented algebras carries a two-sided "formal series"
ideal: the powers of u = xy for the q-plane, the (b, c)-degree for the
q-deformed SL(2) algebra, and the commutant word length for the rank-2
free algebra.  Working modulo the (N+1)-st power of that ideal gives a
desk-scale algebra whose multiplication is inherited from rewriting:
recompose, multiply freely, normalize, decompose, truncate.

Separation reports certify, by an exact rank computation over the
rationals, that the finite filtered pieces of these models are separated
by the default triangular representation families; this is the finite-level
shadow of the injectivity arguments that make the completed models faithful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import MultiPoly
from .freealg import NCPoly, apply_hom, nc_mul
from .freelie import Decomposed, compose, slot_vars, straighten
from .linalg import rank_of_rows
from .matrep import (
    FreeWord,
    build_free_rep,
    build_qplane_rep,
    build_sl2_rep,
    reduce_sl2,
)
from .presentations import (
    AqElement,
    Presentation,
    QPlaneElement,
    _aq_word,
    _qplane_basis_word,
    aq_decompose,
    aq_recompose,
    normal_form,
    qplane_decompose,
    qplane_recompose,
)

ALGEBRAS = ("qplane", "sl2", "free")


class TruncatedElement:
    """An element of one of the three envelope models at truncation N."""

    __slots__ = ("algebra", "n", "q", "payload")

    def __init__(self, algebra, n, payload, q=None):
        if algebra not in ALGEBRAS:
            raise ValueError(f"unknown algebra {algebra!r}")
        n = int(n)
        if n < 0:
            raise ValueError("truncation order must be nonnegative")
        if algebra == "free":
            if q is not None:
                raise ValueError("the free model takes no parameter q")
            if not isinstance(payload, Decomposed):
                raise TypeError("free payload must be Decomposed")
            payload = payload.truncate(n)
        else:
            q = Fraction(q)
            if not q:
                raise ValueError("q must be nonzero")
            if algebra == "qplane":
                if not isinstance(payload, QPlaneElement):
                    raise TypeError("qplane payload must be QPlaneElement")
            elif not isinstance(payload, AqElement):
                raise TypeError("sl2 payload must be AqElement")
            payload = payload.truncate(n)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedElement is immutable")

    def __eq__(self, other):
        if not isinstance(other, TruncatedElement):
            return NotImplemented
        return (self.algebra == other.algebra and self.n == other.n
                and self.q == other.q and self.payload == other.payload)

    def __bool__(self):
        return bool(self.payload)

    def truncate(self, n: int) -> "TruncatedElement":
        return TruncatedElement(self.algebra, n, self.payload.truncate(n),
                                self.q)

    def serialize(self) -> str:
        head = f"{self.algebra} N={self.n}"
        if self.q is not None:
            head += f" q={self.q}"
        return head + "\n" + self.payload.serialize()

    def __repr__(self):
        return self.serialize()


def env_from_poly(a: NCPoly, algebra: str, n: int, q=None) -> TruncatedElement:
    """Normalize, decompose, and truncate a free polynomial."""
    if algebra == "qplane":
        nf = normal_form(a, Presentation.qplane(q))
        return TruncatedElement(algebra, n, qplane_decompose(nf, q), q)
    if algebra == "sl2":
        nf = normal_form(a, Presentation.aq(q))
        return TruncatedElement(algebra, n, aq_decompose(nf, q), q)
    if algebra == "free":
        return TruncatedElement(algebra, n, straighten(a))
    raise ValueError(f"unknown algebra {algebra!r}")


def env_recompose(x: TruncatedElement) -> NCPoly:
    if x.algebra == "qplane":
        return qplane_recompose(x.payload, x.q)
    if x.algebra == "sl2":
        return aq_recompose(x.payload)
    return compose(x.payload)


def env_unit(algebra: str, n: int, q=None) -> TruncatedElement:
    return env_from_poly(NCPoly.unit(), algebra, n, q)


def env_mul(x: TruncatedElement, y: TruncatedElement) -> TruncatedElement:
    """Product in the truncated model.

    Well defined because each truncation ideal is two-sided: u is normal in
    the q-plane, b and c q-commute past a and its inverse, and straightening
    never decreases the commutant word length.
    """
    if (x.algebra, x.n, x.q) != (y.algebra, y.n, y.q):
        raise ValueError("operands live in different truncated models")
    product = nc_mul(env_recompose(x), env_recompose(y))
    return env_from_poly(product, x.algebra, x.n, x.q)


# -- filtered bases -----------------------------------------------------------


def qplane_filtered_basis(d: int):
    """Basis words of the degree-d piece: u^j, x^i u^j, y^i u^j with
    i + j <= d (and the unit)."""
    out = [NCPoly.unit()]
    for j in range(1, d + 1):
        out.append(NCPoly.word(_qplane_basis_word("c", 0, j)))
    for i in range(1, d + 1):
        for j in range(0, d - i + 1):
            out.append(NCPoly.word(_qplane_basis_word("f", i, j)))
            out.append(NCPoly.word(_qplane_basis_word("g", i, j)))
    return out


def sl2_filtered_basis(d: int):
    """Basis words a^i b^j c^k with |i| + j + k <= d."""
    out = []
    for i in range(-d, d + 1):
        for j in range(0, d - abs(i) + 1):
            for k in range(0, d - abs(i) - j + 1):
                out.append(NCPoly.word(_aq_word(i, j, k)))
    return out


def free_filtered_basis(d: int):
    """Ordered monomials e1^a1 e2^a2 g_{beta^1} ... g_{beta^m} of weight
    at most d, a g-letter weighing 1 + |beta|; returned as Decomposed
    single-monomial elements."""
    out = []
    for m in range(0, d + 1):
        vars = slot_vars(m)
        budget = d - m
        if budget < 0:
            break
        for expo in _bounded_exponents(len(vars), budget):
            out.append(Decomposed(
                {m: MultiPoly(vars, {tuple(expo): Fraction(1)})}
            ))
    return out


def _bounded_exponents(length, max_total):
    if length == 0:
        yield ()
        return
    for head in range(max_total + 1):
        for tail in _bounded_exponents(length - 1, max_total - head):
            yield (head,) + tail


@dataclass(frozen=True)
class SeparationReport:
    algebra: str
    degree: int
    dimension: int
    rank: int

    def __post_init__(self):
        if self.rank > self.dimension:
            raise ValueError("rank cannot exceed the dimension")

    @property
    def injective(self) -> bool:
        return self.rank == self.dimension

    def summary(self) -> str:
        flag = "true" if self.injective else "FALSE"
        return (f"algebra = {self.algebra}, filtration degree = "
                f"{self.degree}: dimension = {self.dimension}, "
                f"rank = {self.rank}, injective = {flag}")


def _matrix_row(row, ridx, matrix, postprocess=None):
    for i in range(matrix.size):
        for j in range(i, matrix.size):
            entry = matrix.entry(i, j)
            if postprocess is not None:
                entry = postprocess(entry)
            if not entry:
                continue
            if isinstance(entry, MultiPoly):
                for expo, c in entry.terms.items():
                    mono = tuple(sorted(
                        (v, e) for v, e in zip(entry.vars, expo) if e
                    ))
                    row[(ridx, i, j, mono)] = \
                        row.get((ridx, i, j, mono), Fraction(0)) + c
            else:
                key = (ridx, i, j, ())
                row[key] = row.get(key, Fraction(0)) + Fraction(entry)


def separation_rank(algebra: str, q, degree: int,
                    reps=None) -> SeparationReport:
    """Exact rank of the evaluation map on the filtered basis.

    The map sends each basis element to the concatenated symbolic entries of
    its images under the listed representations; the rank is computed on
    the rational monomial-coefficient matrix, with no parameter sampling.
    Default families: sizes 1..degree+1 in both variants for the q-plane,
    sizes 1..degree+1 for sl2, word lengths 0..degree for the free model.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if reps is not None and not list(reps):
        raise ValueError("empty representation list")
    rows = []
    if algebra == "qplane":
        basis = qplane_filtered_basis(degree)
        if reps is None:
            reps = [(p, variant) for p in range(1, degree + 2)
                    for variant in ("plain", "primed")]
        images = [build_qplane_rep(p, variant, q) for p, variant in reps]
        for element in basis:
            row = {}
            for ridx, imgs in enumerate(images):
                _matrix_row(row, ridx, apply_hom(element, imgs))
            rows.append(row)
    elif algebra == "sl2":
        basis = sl2_filtered_basis(degree)
        if reps is None:
            reps = list(range(1, degree + 2))
        images = [build_sl2_rep(p, q) for p in reps]
        for element in basis:
            row = {}
            for ridx, imgs in enumerate(images):
                _matrix_row(row, ridx, reduce_sl2(apply_hom(element, imgs)))
            rows.append(row)
    elif algebra == "free":
        basis = free_filtered_basis(degree)
        if reps is None:
            reps = list(range(0, degree + 1))
        images = [build_free_rep(None, FreeWord.symbolic(m)) for m in reps]
        for element in basis:
            poly = compose(element)
            row = {}
            for ridx, imgs in enumerate(images):
                _matrix_row(row, ridx, apply_hom(poly, imgs))
            rows.append(row)
    else:
        raise ValueError(f"unknown algebra {algebra!r}")
    rank = rank_of_rows(rows)
    return SeparationReport(algebra, degree, len(basis), rank)
