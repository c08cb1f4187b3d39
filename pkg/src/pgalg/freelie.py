"""Free Lie algebra machinery for the rank-k free algebra.

The commutant of the free Lie algebra on e_1, ..., e_k is itself free on
the generators

    g[(l,j); beta] = (ad e_1)^{beta_1} ... (ad e_{l-1})^{beta_{l-1}}
                     (ad e_l)^{beta_l + 1} (e_j),

indexed by pairs k >= l > j >= 1 and exponent vectors beta in Z_+^l, with
ad a (b) = ab - ba throughout.  For k = 2 the index pair is unique and we
write g_beta with beta = (beta_1, beta_2).

Straightening moves every element of the rank-2 free associative algebra
into the ordered form  e1^a1 e2^a2 g_{beta^1} ... g_{beta^m}  and records
it as one polynomial h_m per commutant word length m, in the variables
l1, l2, s_1, t_1, ..., s_m, t_m: the slot monomial s_p^b1 t_p^b2 encodes
the factor g_{(b1,b2)} in position p.  No reordering happens among the
g-letters (their tensor words are free).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactnum import MultiPoly
from .freealg import NCPoly, commutator, nc_mul
from .presentations import StepBudgetExceeded

STRAIGHTEN_BUDGET = 10 ** 6


class GGen:
    """A free generator of the commutant."""

    __slots__ = ("delta", "beta")

    def __init__(self, delta, beta):
        l, j = delta
        l, j = int(l), int(j)
        if not l > j >= 1:
            raise ValueError(f"need l > j >= 1, got {(l, j)}")
        beta = tuple(int(b) for b in beta)
        if len(beta) != l:
            raise ValueError(f"beta must have length {l}")
        if any(b < 0 for b in beta):
            raise ValueError("beta entries must be nonnegative")
        object.__setattr__(self, "delta", (l, j))
        object.__setattr__(self, "beta", beta)

    def __setattr__(self, name, value):
        raise AttributeError("GGen is immutable")

    @property
    def letters(self) -> int:
        return sum(self.beta) + 2

    def sort_key(self):
        return (self.letters, self.delta, self.beta)

    def __eq__(self, other):
        if not isinstance(other, GGen):
            return NotImplemented
        return self.delta == other.delta and self.beta == other.beta

    def __hash__(self):
        return hash((self.delta, self.beta))

    def __repr__(self):
        l, j = self.delta
        return f"g[{l},{j};{','.join(str(b) for b in self.beta)}]"


def g2(b1, b2) -> GGen:
    """The rank-2 generator g_{(b1, b2)}."""
    return GGen((2, 1), (b1, b2))


def enumerate_ggens(k: int, max_letters: int):
    """All commutant generators with at most ``max_letters`` letters.

    Sorted by (letter count, index pair, beta).  Empty for k = 1: there are
    no index pairs, so the commutant has no generators.
    """
    out = []
    for l in range(2, k + 1):
        for j in range(1, l):
            out.extend(
                GGen((l, j), beta)
                for beta in _exponent_vectors(l, max_letters - 2)
            )
    out.sort(key=GGen.sort_key)
    return out


def _exponent_vectors(length, max_total):
    if max_total < 0:
        return
    if length == 0:
        yield ()
        return
    for head in range(max_total + 1):
        for tail in _exponent_vectors(length - 1, max_total - head):
            yield (head,) + tail


def expand_g(g: GGen, k: int) -> NCPoly:
    """The fully expanded commutator polynomial of a generator."""
    l, j = g.delta
    if l > k:
        raise ValueError(f"{g} is not a generator for rank {k}")
    poly = NCPoly.gen(f"e{j}")
    reps = list(g.beta)
    reps[l - 1] += 1
    for i in range(l, 0, -1):
        e_i = NCPoly.gen(f"e{i}")
        for _ in range(reps[i - 1]):
            poly = commutator(e_i, poly)
    return poly


# -- Lie polynomials over the commutant generators ------------------------------


def _tree_key(tree):
    if isinstance(tree, GGen):
        return (0, tree.sort_key())
    return (1, _tree_key(tree[1]), _tree_key(tree[2]))


def _bracket_terms(u, v):
    """Canonical form of the bracket of two trees: [t, t] = 0 and the
    arguments of every stored bracket node are sorted."""
    ku, kv = _tree_key(u), _tree_key(v)
    if ku == kv:
        return []
    if ku < kv:
        return [(("br", u, v), Fraction(1))]
    return [(("br", v, u), Fraction(-1))]


class LiePoly:
    """Rational combination of bracket trees with GGen leaves."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for tree, c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            clean[tree] = clean.get(tree, Fraction(0)) + c
        object.__setattr__(
            self, "terms", {t: c for t, c in clean.items() if c}
        )

    def __setattr__(self, name, value):
        raise AttributeError("LiePoly is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def leaf(cls, g: GGen):
        return cls({g: Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LiePoly):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for t, c in other.terms.items():
            prev = out.get(t)
            out[t] = c if prev is None else prev + c
        return LiePoly(out)

    def __neg__(self):
        return LiePoly({t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return LiePoly({t: v * c for t, v in self.terms.items()})

    def bracket(self, other) -> "LiePoly":
        out = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                for tree, sign in _bracket_terms(t1, t2):
                    c = c1 * c2 * sign
                    prev = out.get(tree)
                    out[tree] = c if prev is None else prev + c
        return LiePoly(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}*{_render_tree(t)}" if c != 1 else _render_tree(t)
            for t, c in sorted(self.terms.items(),
                               key=lambda item: _tree_key(item[0]))
        )


def _render_tree(tree):
    if isinstance(tree, GGen):
        return repr(tree)
    return f"[{_render_tree(tree[1])},{_render_tree(tree[2])}]"


def ad_e(i: int, x, k: int = 2) -> LiePoly:
    """Apply ad e_i inside the commutant, staying in generator coordinates.

    Only the rank-2 recursion is implemented:

        ad e_1 (g_{(b1, b2)}) = g_{(b1+1, b2)}
        ad e_2 (g_{(0,  b2)}) = g_{(0, b2+1)}
        ad e_2 (g_{(b1, b2)}) = [g_{(0,0)}, g_{(b1-1, b2)}]
                                 + ad e_1 (ad e_2 (g_{(b1-1, b2)}))

    (the last line is the Jacobi identity with [e2, e1] = g_{(0,0)}), and on
    bracket trees ad acts as a derivation.  Compatibility with the expanded
    commutator polynomials is part of the test suite.
    """
    if k != 2:
        raise ValueError("the ad recursion is implemented for rank 2 only")
    if i not in (1, 2):
        raise ValueError("generator index must be 1 or 2")
    if isinstance(x, GGen):
        x = LiePoly.leaf(x)
    out = LiePoly.zero()
    for tree, c in x.terms.items():
        out = out + _ad_tree(i, tree).scale(c)
    return out


def _ad_tree(i, tree) -> LiePoly:
    if isinstance(tree, GGen):
        return _ad_leaf(i, tree.beta)
    _, u, v = tree
    left = _ad_tree(i, u).bracket(LiePoly.leaf(v) if isinstance(v, GGen)
                                  else LiePoly({v: Fraction(1)}))
    right = (LiePoly.leaf(u) if isinstance(u, GGen)
             else LiePoly({u: Fraction(1)})).bracket(_ad_tree(i, v))
    return left + right


@lru_cache(maxsize=None)
def _ad_leaf(i, beta) -> LiePoly:
    b1, b2 = beta
    if i == 1:
        return LiePoly.leaf(g2(b1 + 1, b2))
    if b1 == 0:
        return LiePoly.leaf(g2(0, b2 + 1))
    inner = g2(b1 - 1, b2)
    head = LiePoly.leaf(g2(0, 0)).bracket(LiePoly.leaf(inner))
    return head + ad_e(1, ad_e(2, inner))


def expand_lie(x: LiePoly, k: int = 2) -> NCPoly:
    """Expand a Lie polynomial into the free associative algebra."""
    total = NCPoly.zero()
    for tree, c in x.terms.items():
        total = total + _expand_tree(tree, k).scale(c)
    return total


def _expand_tree(tree, k) -> NCPoly:
    if isinstance(tree, GGen):
        return expand_g(tree, k)
    return commutator(_expand_tree(tree[1], k), _expand_tree(tree[2], k))


def linearize(x: LiePoly):
    """Flatten bracket trees into tensor words of g-letters.

    Returns a map  (beta^1, ..., beta^r) -> coefficient  with every bracket
    expanded as [u, v] = uv - vu.
    """
    out = {}
    for tree, c in x.terms.items():
        for word, v in _linearize_tree(tree).items():
            prev = out.get(word)
            total = v * c if prev is None else prev + v * c
            out[word] = total
    return {w: c for w, c in out.items() if c}


def _linearize_tree(tree):
    if isinstance(tree, GGen):
        return {(tree.beta,): Fraction(1)}
    left = _linearize_tree(tree[1])
    right = _linearize_tree(tree[2])
    out = {}
    for w1, c1 in left.items():
        for w2, c2 in right.items():
            for word, sign in ((w1 + w2, 1), (w2 + w1, -1)):
                c = c1 * c2 * sign
                prev = out.get(word)
                out[word] = c if prev is None else prev + c
    return out


# -- the ordered decomposition ---------------------------------------------------


def slot_vars(m: int):
    """Variable list for the length-m slot polynomial."""
    vars = ["l1", "l2"]
    for p in range(1, m + 1):
        vars.extend((f"s{p}", f"t{p}"))
    return tuple(vars)


class Decomposed:
    """One polynomial h_m per commutant word length m.

    h_m lives in l1, l2, s_1, t_1, ..., s_m, t_m; the monomial
    l1^a1 l2^a2 prod_p s_p^b1 t_p^b2 stands for the ordered product
    e1^a1 e2^a2 g_{beta^1} ... g_{beta^m}.
    """

    __slots__ = ("slots",)

    def __init__(self, slots=None):
        clean = {}
        for m, h in (slots or {}).items():
            m = int(m)
            if m < 0:
                raise ValueError("slot index must be nonnegative")
            if not isinstance(h, MultiPoly):
                h = MultiPoly.constant(h, slot_vars(m))
            canon = slot_vars(m)
            extra = [v for v in h.vars if v not in canon
                     and h.degree_in(v) > 0]
            if extra:
                raise ValueError(
                    f"slot {m} polynomial uses foreign variables {extra}"
                )
            if h.vars != canon:
                h = h.drop_unused()
                h = MultiPoly(canon, h._embed(canon))
            if h:
                clean[m] = h
        object.__setattr__(self, "slots", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Decomposed is immutable")

    def __bool__(self):
        return bool(self.slots)

    def __eq__(self, other):
        if not isinstance(other, Decomposed):
            return NotImplemented
        if set(self.slots) != set(other.slots):
            return False
        return all(self.slots[m] == other.slots[m] for m in self.slots)

    def __add__(self, other):
        out = dict(self.slots)
        for m, h in other.slots.items():
            out[m] = out[m] + h if m in out else h
        return Decomposed(out)

    def truncate(self, n: int) -> "Decomposed":
        return Decomposed({m: h for m, h in self.slots.items() if m <= n})

    def max_slot(self) -> int:
        return max(self.slots, default=0)

    def __repr__(self):
        return self.serialize()

    def serialize(self) -> str:
        lines = [f"{m} | {self.slots[m].render()}"
                 for m in sorted(self.slots)]
        return "\n".join(lines) if lines else "0"


def _as_mixed(word):
    out = []
    for g in word:
        if g == "e1":
            out.append(1)
        elif g == "e2":
            out.append(2)
        else:
            raise ValueError(f"unexpected generator {g!r}; rank-2 input "
                             "uses e1, e2")
    return tuple(out)


@lru_cache(maxsize=None)
def _push_corrections(i, beta):
    """Linearized form of ad e_i (g_beta), used when e_i crosses g_beta."""
    return tuple(linearize(ad_e(i, g2(*beta))).items())


def straighten(a: NCPoly, budget: int = STRAIGHTEN_BUDGET) -> Decomposed:
    """Decompose a rank-2 free polynomial into ordered slot polynomials.

    Rewrites mixed words over the letters e1, e2 and g_beta with the two
    moves

        e2 e1   ->  e1 e2 + g_{(0,0)}
        g  e_i  ->  e_i g - ad e_i (g)      (result linearized in T(V))

    until every word has the shape e1^a e2^b g...g.  Each move strictly
    decreases (e-letter count, g-letters left of an e, e2-before-e1
    inversions) lexicographically, so the loop terminates.
    """
    if a.params:
        raise ValueError("straightening expects rational coefficients")
    work = {}
    for word, c in a.terms.items():
        key = _as_mixed(word)
        prev = work.get(key)
        work[key] = c if prev is None else prev + c
    normal = {}
    steps = 0

    def add(target, word, c):
        prev = target.get(word)
        total = c if prev is None else prev + c
        if total:
            target[word] = total
        elif word in target:
            del target[word]

    while work:
        word, coeff = work.popitem()
        pos = _first_violation(word)
        if pos is None:
            add(normal, word, coeff)
            continue
        steps += 1
        if steps > budget:
            raise StepBudgetExceeded(
                f"exceeded {budget} straightening steps"
            )
        left, a1, a2, right = word[:pos], word[pos], word[pos + 1], \
            word[pos + 2:]
        if a1 == 2 and a2 == 1:
            add(work, left + (1, 2) + right, coeff)
            add(work, left + ((0, 0),) + right, coeff)
        else:
            # a1 is a g-letter, a2 an e-letter
            add(work, left + (a2, a1) + right, coeff)
            for gword, c in _push_corrections(a2, a1):
                add(work, left + gword + right, -coeff * c)
    slots = {}
    for word, coeff in normal.items():
        m = sum(1 for item in word if isinstance(item, tuple))
        a1 = sum(1 for item in word if item == 1)
        a2 = sum(1 for item in word if item == 2)
        vars = slot_vars(m)
        expo = [0] * len(vars)
        expo[0], expo[1] = a1, a2
        for p, item in enumerate(w for w in word if isinstance(w, tuple)):
            expo[2 + 2 * p] = item[0]
            expo[3 + 2 * p] = item[1]
        mono = MultiPoly(vars, {tuple(expo): coeff})
        slots[m] = slots[m] + mono if m in slots else mono
    return Decomposed(slots)


def _first_violation(word):
    for pos in range(len(word) - 1):
        a1, a2 = word[pos], word[pos + 1]
        if a1 == 2 and a2 == 1:
            return pos
        if isinstance(a1, tuple) and isinstance(a2, int):
            return pos
    return None


def compose(d: Decomposed) -> NCPoly:
    """Multiply the ordered form back out in the free algebra."""
    total = NCPoly.zero()
    for m, h in d.slots.items():
        for expo, coeff in h.terms.items():
            a1, a2 = expo[0], expo[1]
            word = ("e1",) * a1 + ("e2",) * a2
            poly = NCPoly.word(word, coeff)
            for p in range(m):
                beta = (expo[2 + 2 * p], expo[3 + 2 * p])
                poly = nc_mul(poly, _expanded_g2(beta))
            total = total + poly
    return total


@lru_cache(maxsize=None)
def _expanded_g2(beta) -> NCPoly:
    return expand_g(g2(*beta), 2)
