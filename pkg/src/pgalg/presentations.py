"""Presented algebras and their normal forms.

Covered presentations: the q-plane (xy = q yx), the q-deformed SL(2)
coordinate algebra on a, a^-1, b, c, enveloping algebras given by structure
constants, and free algebras (no rules).  Every rewrite rule strictly
decreases the graded-lexicographic order, so rewriting terminates; a step
budget guards against presentation bugs.

Also here: the basis decompositions attached to these normal forms (the
(c_j, f_j, g_j) rows of the q-plane, the Laurent-times-monomial basis of
the SL(2) algebra), the elimination of the redundant generator d, and
quotients of structure-constant Lie algebras by ideals.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import MultiPoly
from .freealg import NCPoly, check_gen_name, nc_mul

STEP_BUDGET = 10 ** 6


class StepBudgetExceeded(RuntimeError):
    """Rewriting exceeded its step budget; the presentation is suspect."""


class Presentation:
    """Ordered generators plus terminating rewrite rules."""

    __slots__ = ("kind", "gens", "q", "rules", "_rank", "_by_first")

    def __init__(self, kind, gens, rules, q=None):
        gens = tuple(check_gen_name(g) for g in gens)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generators")
        if q is not None:
            q = Fraction(q)
            if not q:
                raise ValueError("q must be nonzero")
        rank = {g: i for i, g in enumerate(gens)}
        norm_rules = []
        for lhs, rhs in rules:
            lhs = tuple(lhs)
            if not isinstance(rhs, NCPoly):
                rhs = NCPoly(rhs)
            for w in (lhs, *rhs.terms):
                for g in w:
                    if g not in rank:
                        raise ValueError(f"rule uses unknown generator {g!r}")
            lkey = _grlex_key(lhs, rank)
            for w in rhs.terms:
                if _grlex_key(w, rank) >= lkey:
                    raise ValueError(
                        f"rule {lhs} -> {w} does not decrease the order"
                    )
            norm_rules.append((lhs, rhs))
        by_first = {}
        for rule in norm_rules:
            by_first.setdefault(rule[0][0], []).append(rule)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "rules", tuple(norm_rules))
        object.__setattr__(self, "_rank", rank)
        object.__setattr__(self, "_by_first", by_first)

    def __setattr__(self, name, value):
        raise AttributeError("Presentation is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def qplane(cls, q):
        """Generators x, y with xy = q yx; normal monomials are x^i y^j."""
        q = Fraction(q)
        return cls(
            "qplane", ("x", "y"),
            [(("y", "x"), {("x", "y"): Fraction(1) / q})],
            q=q,
        )

    @classmethod
    def aq(cls, q):
        """Generators a, ai, b, c with ab = q ba, ac = q ca, bc = cb and
        ai the two-sided inverse of a.  Normal monomials are a^i b^j c^k
        with a^i spelled a...a or ai...ai."""
        q = Fraction(q)
        qi = Fraction(1) / q
        one = {(): Fraction(1)}
        return cls(
            "aq", ("a", "ai", "b", "c"),
            [
                (("b", "a"), {("a", "b"): qi}),
                (("c", "a"), {("a", "c"): qi}),
                (("c", "b"), {("b", "c"): Fraction(1)}),
                (("b", "ai"), {("ai", "b"): q}),
                (("c", "ai"), {("ai", "c"): q}),
                (("a", "ai"), one),
                (("ai", "a"), one),
            ],
            q=q,
        )

    @classmethod
    def uea(cls, lie: "LieData"):
        """PBW rewriting e_j e_i -> e_i e_j + [e_j, e_i] for j > i."""
        rules = []
        names = lie.names
        for j in range(lie.dim):
            for i in range(j):
                rhs = {(names[i], names[j]): Fraction(1)}
                for k, c in lie.bracket(j, i).items():
                    key = (names[k],)
                    rhs[key] = rhs.get(key, Fraction(0)) + c
                rules.append(((names[j], names[i]), rhs))
        return cls("uea", names, rules)

    @classmethod
    def free(cls, gens):
        return cls("free", tuple(gens), [])

    # -- rewriting -----------------------------------------------------------

    def find_redex(self, word):
        by_first = self._by_first
        for pos, letter in enumerate(word):
            for lhs, rhs in by_first.get(letter, ()):
                if word[pos:pos + len(lhs)] == lhs:
                    return pos, lhs, rhs
        return None

    def is_normal_word(self, word) -> bool:
        return self.find_redex(word) is None

    def grlex_key(self, word):
        return _grlex_key(word, self._rank)


def _grlex_key(word, rank):
    return (len(word), tuple(rank[g] for g in word))


def normal_form(a: NCPoly, pres: Presentation,
                budget: int = STEP_BUDGET) -> NCPoly:
    """The unique irreducible form of ``a`` under the presentation's rules.

    Raises :class:`StepBudgetExceeded` after ``budget`` rule applications.
    """
    for word in a.terms:
        for g in word:
            if g not in pres._rank:
                raise ValueError(f"unknown generator {g!r} for {pres.kind}")
    out = {}
    work = dict(a.terms)
    steps = 0
    while work:
        word, coeff = work.popitem()
        hit = pres.find_redex(word)
        if hit is None:
            prev = out.get(word)
            out[word] = coeff if prev is None else prev + coeff
            continue
        steps += 1
        if steps > budget:
            raise StepBudgetExceeded(
                f"exceeded {budget} rewriting steps; presentation bug?"
            )
        pos, lhs, rhs = hit
        prefix = word[:pos]
        suffix = word[pos + len(lhs):]
        for rword, rc in rhs.terms.items():
            nw = prefix + rword + suffix
            nc = coeff * rc
            prev = work.get(nw)
            total = nc if prev is None else prev + nc
            if total:
                work[nw] = total
            elif nw in work:
                del work[nw]
    return NCPoly(out, a.params)


# -- q-plane basis rows --------------------------------------------------------


class QPlaneElement:
    """Rows (c_j, f_j, g_j) of the q-plane basis decomposition.

    Row j stands for (c_j + f_j(x) + g_j(y)) * u^j with u = xy.  The shared
    constant is stored once in c_j and the polynomials have zero constant
    term, which makes the decomposition a bijection.
    """

    __slots__ = ("rows",)

    def __init__(self, rows=None):
        clean = {}
        for j, (c, f, g) in (rows or {}).items():
            j = int(j)
            if j < 0:
                raise ValueError("row index must be nonnegative")
            c = Fraction(c)
            f = _as_unipoly(f, "x")
            g = _as_unipoly(g, "y")
            if f.constant_value() or g.constant_value():
                raise ValueError(
                    "row polynomials must vanish at 0; the constant lives in c"
                )
            if c or f or g:
                clean[j] = (c, f, g)
        object.__setattr__(self, "rows", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QPlaneElement is immutable")

    def __eq__(self, other):
        if not isinstance(other, QPlaneElement):
            return NotImplemented
        return self.rows == other.rows

    def __bool__(self):
        return bool(self.rows)

    def truncate(self, n: int) -> "QPlaneElement":
        return QPlaneElement(
            {j: row for j, row in self.rows.items() if j <= n}
        )

    def max_row(self) -> int:
        return max(self.rows, default=0)

    def __repr__(self):
        return self.serialize()

    def serialize(self) -> str:
        lines = []
        for j in sorted(self.rows):
            c, f, g = self.rows[j]
            lines.append(f"{j} | {c} | {f.render()} | {g.render()}")
        return "\n".join(lines) if lines else "0"


def _as_unipoly(p, var) -> MultiPoly:
    if isinstance(p, MultiPoly):
        live = [v for i, v in enumerate(p.vars)
                if any(e[i] for e in p.terms)]
        if live and live != [var]:
            raise ValueError(f"expected a polynomial in {var!r}, got {p}")
        return MultiPoly((var,), {
            (sum(e),): c for e, c in p.terms.items()
        })
    if isinstance(p, dict):
        return MultiPoly((var,), {(int(k),): Fraction(v)
                                  for k, v in p.items()})
    return MultiPoly.constant(p, (var,))


def _qplane_basis_word(kind, i, j):
    u = ("x", "y") * j
    if kind == "f":
        return ("x",) * i + u
    if kind == "g":
        return ("y",) * i + u
    return u


def qplane_decompose(a: NCPoly, q) -> QPlaneElement:
    """Sort a normal form into basis rows, computing each q-power by
    rewriting the corresponding basis monomial (never by a closed formula).
    """
    pres = Presentation.qplane(q)
    rows = {}
    for word, coeff in a.terms.items():
        if not pres.is_normal_word(word):
            raise ValueError("input is not in normal form")
        i = 0
        while i < len(word) and word[i] == "x":
            i += 1
        j = len(word) - i
        if any(g != "y" for g in word[i:]):
            raise ValueError("input is not in normal form")
        jj = min(i, j)
        if i > j:
            kind, deg = "f", i - j
        elif j > i:
            kind, deg = "g", j - i
        else:
            kind, deg = "c", 0
        basis = NCPoly.word(_qplane_basis_word(kind, deg, jj))
        nf = normal_form(basis, pres)
        if len(nf.terms) != 1 or word not in nf.terms:
            raise AssertionError("basis monomial did not normalize to the "
                                 "expected word")
        factor = coeff / nf.terms[word]
        c, f, g = rows.get(jj, (Fraction(0),
                                MultiPoly(("x",)), MultiPoly(("y",))))
        if kind == "c":
            c += factor
        elif kind == "f":
            f = f + MultiPoly(("x",), {(deg,): factor})
        else:
            g = g + MultiPoly(("y",), {(deg,): factor})
        rows[jj] = (c, f, g)
    return QPlaneElement(rows)


def qplane_recompose(e: QPlaneElement, q) -> NCPoly:
    """Inverse of the decomposition; the result is in normal form."""
    pres = Presentation.qplane(q)
    total = NCPoly.zero()
    for j, (c, f, g) in e.rows.items():
        if c:
            total = total + NCPoly.word(_qplane_basis_word("c", 0, j), c)
        for (deg,), coeff in f.terms.items():
            total = total + NCPoly.word(
                _qplane_basis_word("f", deg, j), coeff
            )
        for (deg,), coeff in g.terms.items():
            total = total + NCPoly.word(
                _qplane_basis_word("g", deg, j), coeff
            )
    return normal_form(total, pres)


# -- the SL(2) algebra ----------------------------------------------------------


class AqElement:
    """Finite sum of basis monomials a^i b^j c^k (i may be negative)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (i, j, k), c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            if j < 0 or k < 0:
                raise ValueError("b and c exponents must be nonnegative")
            key = (int(i), int(j), int(k))
            clean[key] = clean.get(key, Fraction(0)) + c
        object.__setattr__(
            self, "terms", {t: c for t, c in clean.items() if c}
        )

    def __setattr__(self, name, value):
        raise AttributeError("AqElement is immutable")

    def __eq__(self, other):
        if not isinstance(other, AqElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def truncate(self, n: int) -> "AqElement":
        return AqElement({
            (i, j, k): c for (i, j, k), c in self.terms.items()
            if j + k <= n
        })

    def __repr__(self):
        return self.serialize()

    def serialize(self) -> str:
        lines = []
        for (i, j, k) in sorted(self.terms):
            lines.append(f"{i} {j} {k} | {self.terms[(i, j, k)]}")
        return "\n".join(lines) if lines else "0"


def _aq_word(i, j, k):
    head = ("a",) * i if i >= 0 else ("ai",) * (-i)
    return head + ("b",) * j + ("c",) * k


def aq_decompose(a: NCPoly, q) -> AqElement:
    """Read the basis coordinates off an Aq normal form."""
    pres = Presentation.aq(q)
    terms = {}
    for word, coeff in a.terms.items():
        if not pres.is_normal_word(word):
            raise ValueError("input is not in normal form")
        counts = {"a": 0, "ai": 0, "b": 0, "c": 0}
        for g in word:
            counts[g] += 1
        if counts["a"] and counts["ai"]:
            raise ValueError("input is not in normal form")
        key = (counts["a"] - counts["ai"], counts["b"], counts["c"])
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return AqElement(terms)


def aq_recompose(e: AqElement) -> NCPoly:
    return NCPoly({_aq_word(i, j, k): c
                   for (i, j, k), c in e.terms.items()})


def sl2_eliminate_d(a: NCPoly, q) -> NCPoly:
    """Replace d by ai*(1 + q*b*c) and normalize over a, ai, b, c.

    The images of the redundant-generator relations normalize to zero, which
    the test suite checks for all of them.
    """
    q = Fraction(q)
    d_image = NCPoly({
        ("ai",): Fraction(1),
        ("ai", "b", "c"): q,
    })
    total = NCPoly.zero(a.params)
    for word, coeff in a.terms.items():
        piece = NCPoly.unit(a.params)
        start = 0
        for pos, g in enumerate(word):
            if g == "d":
                if pos > start:
                    piece = nc_mul(
                        piece, NCPoly.word(word[start:pos], params=a.params)
                    )
                piece = nc_mul(piece, NCPoly(d_image.terms, a.params))
                start = pos + 1
        if start < len(word):
            piece = nc_mul(
                piece, NCPoly.word(word[start:], params=a.params)
            )
        total = total + piece.scale(coeff)
    return normal_form(total, Presentation.aq(q))


# -- Lie structure constants -----------------------------------------------------


class LieData:
    """A finite-dimensional Lie algebra by structure constants.

    ``bracket(i, j)`` returns the coordinates of [x_i, x_j] in the basis.
    Antisymmetry and the Jacobi identity are validated on construction.
    """

    __slots__ = ("dim", "names", "_c")

    def __init__(self, dim, c, names=None):
        dim = int(dim)
        if names is None:
            names = tuple(f"x{i + 1}" for i in range(dim))
        names = tuple(names)
        if len(names) != dim:
            raise ValueError("need one name per basis element")
        table = {}
        for (i, j, k), v in c.items():
            v = Fraction(v)
            if not v:
                continue
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise ValueError(f"index out of range in {(i, j, k)}")
            table[(i, j, k)] = table.get((i, j, k), Fraction(0)) + v
        table = {t: v for t, v in table.items() if v}
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_c", table)
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("LieData is immutable")

    def bracket(self, i, j):
        out = {}
        for (a, b, k), v in self._c.items():
            if a == i and b == j:
                out[k] = v
        return out

    def _validate(self):
        for i in range(self.dim):
            if self.bracket(i, i):
                raise ValueError(f"[x{i + 1}, x{i + 1}] must vanish")
            for j in range(i):
                left = self.bracket(i, j)
                right = self.bracket(j, i)
                for k in set(left) | set(right):
                    if left.get(k, Fraction(0)) != -right.get(k, Fraction(0)):
                        raise ValueError("structure constants are not "
                                         "antisymmetric")
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    acc = {}
                    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                        for l, v in self.bracket(a, b).items():
                            for m, w in self.bracket(l, c).items():
                                acc[m] = acc.get(m, Fraction(0)) + v * w
                    if any(acc.values()):
                        raise ValueError("Jacobi identity fails")

    @classmethod
    def from_triples(cls, dim, triples, names=None, one_based=True):
        """Build from (i, j, k, value) quadruples; [x_i, x_j] gets value on
        x_k, and the antisymmetric counterpart is filled in."""
        c = {}
        off = 1 if one_based else 0
        for i, j, k, v in triples:
            v = Fraction(v)
            c[(i - off, j - off, k - off)] = \
                c.get((i - off, j - off, k - off), Fraction(0)) + v
            c[(j - off, i - off, k - off)] = \
                c.get((j - off, i - off, k - off), Fraction(0)) - v
        return cls(dim, c, names)

    @classmethod
    def euclid2(cls):
        """Motions of the plane: [x1,x2] = x3, [x1,x3] = -x2, [x2,x3] = 0."""
        return cls.from_triples(3, [(1, 2, 3, 1), (1, 3, 2, -1)])

    @classmethod
    def heisenberg(cls):
        """[x1, x2] = x3 and all other brackets zero."""
        return cls.from_triples(3, [(1, 2, 3, 1)])

    @classmethod
    def abelian(cls, dim):
        return cls(dim, {})


class NotAnIdeal(ValueError):
    """The selected basis subset does not span an ideal."""


def lie_quotient(lie: LieData, ideal_indices) -> LieData:
    """Quotient by the span of the selected basis elements.

    Checks that brackets of ideal elements with every generator land back in
    the span; the quotient keeps the complementary basis in order.
    """
    ideal = set(int(i) for i in ideal_indices)
    for i in ideal:
        if not 0 <= i < lie.dim:
            raise ValueError(f"index {i} out of range")
        for j in range(lie.dim):
            for k, v in lie.bracket(i, j).items():
                if v and k not in ideal:
                    raise NotAnIdeal(
                        f"[{lie.names[i]}, {lie.names[j]}] leaves the span"
                    )
    kept = [i for i in range(lie.dim) if i not in ideal]
    pos = {i: n for n, i in enumerate(kept)}
    c = {}
    for i in kept:
        for j in kept:
            for k, v in lie.bracket(i, j).items():
                if k in ideal:
                    continue
                c[(pos[i], pos[j], pos[k])] = v
    return LieData(len(kept), c, tuple(lie.names[i] for i in kept))
