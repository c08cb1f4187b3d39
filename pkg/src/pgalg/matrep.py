"""Upper triangular matrices over exact scalars and the triangular
representation families used throughout the package: the q-plane pair
(diagonal-times-parameter, nilpotent shift), the q-deformed SL(2) family,
and the two-parameter-per-slot family for the rank-2 free algebra.

The closed corner-entry formulas implemented here are always checked in the
test suite against direct matrix evaluation, which is the oracle.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import MultiPoly


def _is_scalar(x):
    return isinstance(x, (int, Fraction, MultiPoly))


def _zeroish(x):
    return not x


class TriMatrix:
    """Square upper triangular matrix; entries are Fractions or MultiPolys."""

    __slots__ = ("size", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        p = len(rows)
        for r in rows:
            if len(r) != p:
                raise ValueError("matrix must be square")
        for i in range(p):
            for j in range(i):
                if not _zeroish(rows[i][j]):
                    raise ValueError(
                        f"entry ({i},{j}) below the diagonal is nonzero"
                    )
        object.__setattr__(self, "size", p)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("TriMatrix is immutable")

    @classmethod
    def zeros(cls, p):
        return cls([[Fraction(0)] * p for _ in range(p)])

    @classmethod
    def identity(cls, p):
        return cls([
            [Fraction(1) if i == j else Fraction(0) for j in range(p)]
            for i in range(p)
        ])

    @classmethod
    def diagonal(cls, entries):
        entries = list(entries)
        p = len(entries)
        return cls([
            [entries[i] if i == j else Fraction(0) for j in range(p)]
            for i in range(p)
        ])

    @classmethod
    def superdiagonal(cls, entries):
        """(p+1)x(p+1) matrix with the given entries just above the diagonal."""
        entries = list(entries)
        p = len(entries) + 1
        rows = [[Fraction(0)] * p for _ in range(p)]
        for i, e in enumerate(entries):
            rows[i][i + 1] = e
        return cls(rows)

    @classmethod
    def jordan(cls, p):
        """Nilpotent Jordan block: ones above the diagonal."""
        return cls.superdiagonal([Fraction(1)] * (p - 1))

    @classmethod
    def corner_unit(cls, p):
        """Single 1 in the upper right corner."""
        rows = [[Fraction(0)] * p for _ in range(p)]
        if p >= 1:
            rows[0][p - 1] = Fraction(1)
        return cls(rows)

    def entry(self, i, j):
        return self.rows[i][j]

    @property
    def upper_right(self):
        return self.rows[0][self.size - 1]

    def __eq__(self, other):
        if not isinstance(other, TriMatrix):
            return NotImplemented
        if self.size != other.size:
            return False
        for r1, r2 in zip(self.rows, other.rows):
            for a, b in zip(r1, r2):
                if a != b:
                    return False
        return True

    def __hash__(self):
        return hash(self.rows)

    def __bool__(self):
        return any(any(not _zeroish(e) for e in r) for r in self.rows)

    def is_zero(self):
        return not self

    def __add__(self, other):
        if not isinstance(other, TriMatrix):
            return NotImplemented
        if self.size != other.size:
            raise ValueError("size mismatch")
        return TriMatrix([
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.rows, other.rows)
        ])

    def __sub__(self, other):
        if not isinstance(other, TriMatrix):
            return NotImplemented
        return self + other.scale(-1)

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, TriMatrix):
            return NotImplemented
        if self.size != other.size:
            raise ValueError("size mismatch")
        p = self.size
        rows = [[Fraction(0)] * p for _ in range(p)]
        for i in range(p):
            for k in range(i, p):
                a = self.rows[i][k]
                if _zeroish(a):
                    continue
                other_row = other.rows[k]
                for j in range(k, p):
                    b = other_row[j]
                    if _zeroish(b):
                        continue
                    rows[i][j] = rows[i][j] + a * b
        return TriMatrix(rows)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        return TriMatrix([[e * c for e in r] for r in self.rows])

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TriMatrix.identity(self.size)
        for _ in range(n):
            result = result * self
        return result

    def commutator(self, other):
        return self * other - other * self

    def map_entries(self, f):
        return TriMatrix([[f(e) for e in r] for r in self.rows])

    def __repr__(self):
        return self.render()

    def render(self) -> str:
        cells = [[_render_entry(e) for e in r] for r in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        lines = [
            "[" + ", ".join(c.rjust(width) for c in row) + "]"
            for row in cells
        ]
        return "\n".join(lines)

    def render_machine(self) -> str:
        """Size line then the p^2 entries in row-major order, one per line."""
        lines = [str(self.size)]
        for row in self.rows:
            lines.extend(_render_entry(e) for e in row)
        return "\n".join(lines)


def _render_entry(e) -> str:
    if isinstance(e, MultiPoly):
        return e.render()
    return str(e)


def in_c2(m: TriMatrix) -> bool:
    """True iff the main diagonal and the first superdiagonal vanish."""
    p = m.size
    for i in range(p):
        if not _zeroish(m.rows[i][i]):
            return False
        if i + 1 < p and not _zeroish(m.rows[i][i + 1]):
            return False
    return True


# -- q-plane representations ---------------------------------------------------


def kmat(p: int, q: Fraction) -> TriMatrix:
    """diag(q^(p-1), ..., q, 1)."""
    if p < 1:
        raise ValueError("size must be at least 1")
    q = Fraction(q)
    return TriMatrix.diagonal([q ** (p - 1 - i) for i in range(p)])


def kmat_inv(p: int, q: Fraction) -> TriMatrix:
    if not q:
        raise ValueError("q must be nonzero")
    return kmat(p, Fraction(1) / Fraction(q))


def emat(p: int) -> TriMatrix:
    """Nilpotent shift: ones on the superdiagonal."""
    if p < 1:
        raise ValueError("size must be at least 1")
    return TriMatrix.superdiagonal([Fraction(1)] * (p - 1)) if p > 1 \
        else TriMatrix.zeros(1)


def build_qplane_rep(p: int, variant: str, q) -> dict:
    """Images of the q-plane generators x, y in size-p triangular matrices.

    plain:   x -> lam * K_p,  y -> E_p        (entries polynomial in lam)
    primed:  x -> E_p,        y -> mu * K_p^-1 (entries polynomial in mu)
    """
    q = Fraction(q)
    if p < 1:
        raise ValueError("size must be at least 1")
    if not q:
        raise ValueError("q must be nonzero")
    if variant == "plain":
        lam = MultiPoly.variable("lam")
        return {"x": kmat(p, q).scale(lam), "y": emat(p)}
    if variant == "primed":
        mu = MultiPoly.variable("mu")
        return {"x": emat(p), "y": kmat_inv(p, q).scale(mu)}
    raise ValueError(f"unknown variant {variant!r}")


def upper_right_qplane(element, p: int, variant: str, q) -> MultiPoly:
    """Closed form for the upper right entry of the size-p image.

    ``element`` is a QPlaneElement with rows (c_j, f_j, g_j) where the
    shared constant is stored once in c_j and f_j(0) = g_j(0) = 0.  The
    plain variant evaluates, with lam the matrix parameter,

        (c_{p-1} + f_{p-1}(lam*q^(p-1))) * lam^(p-1) * q^(p(p-1)/2)
        + sum_{k=0}^{p-2} g_k^{(p-1-k)}(0)/(p-1-k)! * lam^k * q^(k(k+1)/2)

    and the primed variant is the mirror image with f and g exchanged and
    inverse powers of q.  Direct matrix evaluation is the oracle for this
    formula.
    """
    q = Fraction(q)
    if variant not in ("plain", "primed"):
        raise ValueError(f"unknown variant {variant!r}")
    var = MultiPoly.variable("lam" if variant == "plain" else "mu")
    total = MultiPoly.constant(0, (var.vars[0],))
    rows = element.rows
    top = rows.get(p - 1)
    if top is not None:
        c, f, g = top
        if variant == "plain":
            shifted = f.substitute({"x": var * q ** (p - 1)})
            lead = (shifted + c) * var ** (p - 1) * q ** (p * (p - 1) // 2)
        else:
            shifted = g.substitute({"y": var * q ** (1 - p)})
            lead = (shifted + c) * var ** (p - 1) \
                * q ** Fraction(-(p - 1) * (p - 2), 2)
        total = total + lead
    for k in range(p - 1):
        row = rows.get(k)
        if row is None:
            continue
        c, f, g = row
        r = p - 1 - k
        taylor = g.univariate_coeff(r) if variant == "plain" \
            else f.univariate_coeff(r)
        if not taylor:
            continue
        qpow = q ** (k * (k + 1) // 2) if variant == "plain" \
            else q ** Fraction(-k * (k - 1), 2)
        total = total + taylor * qpow * var ** k
    return total


# -- q-deformed SL(2) representations ------------------------------------------


def build_sl2_rep(p: int, q) -> dict:
    """Images a -> lam*K_p, ai -> lami*K_p^-1, b -> mu*E_p, c -> nu*E_p.

    The image of d is derived as ai*(1 + q*b*c).  The inverse parameter is
    the adjoined variable ``lami``; products should be normalized with
    :func:`reduce_sl2` which applies lam*lami = 1.
    """
    q = Fraction(q)
    if p < 1:
        raise ValueError("size must be at least 1")
    if not q:
        raise ValueError("q must be nonzero")
    lam = MultiPoly.variable("lam")
    lami = MultiPoly.variable("lami")
    mu = MultiPoly.variable("mu")
    nu = MultiPoly.variable("nu")
    images = {
        "a": kmat(p, q).scale(lam),
        "ai": kmat_inv(p, q).scale(lami),
        "b": emat(p).scale(mu),
        "c": emat(p).scale(nu),
    }
    one = TriMatrix.identity(p)
    images["d"] = images["ai"] * (one + (images["b"] * images["c"]).scale(q))
    return images


def reduce_sl2(m: TriMatrix) -> TriMatrix:
    """Normalize entries with the relation lam * lami = 1."""
    def fix(e):
        if isinstance(e, MultiPoly):
            return e.reduce_pair("lam", "lami")
        return e
    return m.map_entries(fix)


# -- representations of the rank-2 free algebra --------------------------------


class FreeWord:
    """A word of slot parameters ((s_1,t_1), ..., (s_m,t_m)).

    Entries are scalars (symbolic slot variables s1, t1, ... by default, or
    concrete rationals).
    """

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in pairs))
        for p in self.pairs:
            if len(p) != 2:
                raise ValueError("each slot must be an (s, t) pair")

    def __setattr__(self, name, value):
        raise AttributeError("FreeWord is immutable")

    @classmethod
    def symbolic(cls, m: int):
        return cls([
            (MultiPoly.variable(f"s{p}"), MultiPoly.variable(f"t{p}"))
            for p in range(1, m + 1)
        ])

    @classmethod
    def concrete(cls, values):
        return cls([(Fraction(s), Fraction(t)) for s, t in values])

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def slot_diagonals(w: FreeWord):
    """The two diagonals attached to a word of slot parameters.

    The first is diag(0, s_1, s_1+s_2, ..., s_1+...+s_m) (partial sums from
    the left), the second diag(t_1+...+t_m, ..., t_m, 0) (tail sums).
    """
    m = len(w)
    svals = [p[0] for p in w.pairs]
    tvals = [p[1] for p in w.pairs]
    e_diag = [Fraction(0)]
    acc = Fraction(0)
    for s in svals:
        acc = acc + s
        e_diag.append(acc)
    f_diag = []
    for i in range(m):
        tail = Fraction(0)
        for t in tvals[i:]:
            tail = tail + t
        f_diag.append(tail)
    f_diag.append(Fraction(0))
    return TriMatrix.diagonal(e_diag), TriMatrix.diagonal(f_diag)


def theta_images(w: FreeWord) -> dict:
    """Images of e1, e2 with no scalar shift: e1 -> E_w, e2 -> F_w - J."""
    m = len(w)
    e_w, f_w = slot_diagonals(w)
    return {"e1": e_w, "e2": f_w - TriMatrix.jordan(m + 1)}


def build_free_rep(lam, w: FreeWord) -> dict:
    """Images e_i -> lam_i + theta_w(e_i) on (m+1)x(m+1) matrices.

    ``lam`` is a pair of scalars; pass None for the symbolic pair (l1, l2).
    A zero-length word gives 1x1 matrices, i.e. plain scalars.
    """
    if lam is None:
        lam = (MultiPoly.variable("l1"), MultiPoly.variable("l2"))
    l1, l2 = lam
    base = theta_images(w)
    one = TriMatrix.identity(len(w) + 1)
    return {
        "e1": one.scale(l1) + base["e1"],
        "e2": one.scale(l2) + base["e2"],
    }


def free_upper_right(d, lam, w: FreeWord) -> MultiPoly:
    """Predicted corner entry of the image of a decomposed element.

    Only the slot whose commutant length equals the word length contributes:
    longer slots vanish identically and shorter slots are outside this
    formula's domain (their images can reach the corner through powers of
    the shift term, so callers compare against the matrix oracle only for
    elements supported in slots >= len(w)).  With h the slot polynomial,
    the prediction is

        (-s_1)...(-s_m) * h(l1, l2 + t_1+...+t_m, -s_1, t_1, ..., -s_m, t_m).
    """
    m = len(w)
    h = d.slots.get(m)
    if h is None:
        return MultiPoly.constant(0)
    if lam is None:
        lam = (MultiPoly.variable("l1"), MultiPoly.variable("l2"))
    l1, l2 = lam
    svals = [p[0] for p in w.pairs]
    tvals = [p[1] for p in w.pairs]
    shift = l2
    for t in tvals:
        shift = shift + t
    bindings = {"l1": l1, "l2": shift}
    for p in range(1, m + 1):
        bindings[f"s{p}"] = -1 * svals[p - 1]
        bindings[f"t{p}"] = tvals[p - 1]
    value = h.substitute(bindings)
    for s in svals:
        value = value * (-1 * s)
    if not isinstance(value, MultiPoly):
        value = MultiPoly.constant(value)
    return value
