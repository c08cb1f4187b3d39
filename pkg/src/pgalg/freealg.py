"""Free noncommutative polynomials, an expression parser, and
evaluation of polynomials under matrix assignments of the generators.

Words are flat tuples of generator names (the empty tuple is the unit);
an NCPoly is a finite map word -> coefficient.  Coefficients are rational
by default, or multivariate polynomials over a declared commutative
parameter list.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exactnum import MultiPoly

GEN_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")

Word = tuple


def check_gen_name(name: str) -> str:
    if not GEN_RE.match(name):
        raise ValueError(f"invalid generator name {name!r}")
    return name


class ScalarMismatch(ValueError):
    """Operands live over different scalar rings."""


class ParseError(ValueError):
    """Syntax or identifier error, with a position."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class NCPoly:
    """Finite linear combination of words over a generator alphabet."""

    __slots__ = ("params", "terms")

    def __init__(self, terms=None, params=()):
        params = tuple(params)
        clean = {}
        if terms:
            for word, c in terms.items():
                word = tuple(word)
                c = _coerce(c, params)
                if not c:
                    continue
                prev = clean.get(word)
                clean[word] = c if prev is None else prev + c
        object.__setattr__(self, "params", params)
        object.__setattr__(
            self, "terms", {w: c for w, c in clean.items() if c}
        )

    def __setattr__(self, name, value):
        raise AttributeError("NCPoly is immutable")

    @classmethod
    def zero(cls, params=()):
        return cls({}, params)

    @classmethod
    def unit(cls, params=()):
        return cls({(): Fraction(1)}, params)

    @classmethod
    def gen(cls, name, params=()):
        return cls({(check_gen_name(name),): Fraction(1)}, params)

    @classmethod
    def word(cls, letters, coeff=1, params=()):
        return cls({tuple(letters): coeff}, params)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        if self.params != other.params:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.params, frozenset(self.terms.items())))

    def _check_ring(self, other):
        if self.params != other.params:
            raise ScalarMismatch(
                f"scalar rings differ: {self.params} vs {other.params}"
            )

    def __add__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        self._check_ring(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            prev = out.get(w)
            out[w] = c if prev is None else prev + c
        return NCPoly(out, self.params)

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()}, self.params)

    def __sub__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return nc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = NCPoly.unit(self.params)
        for _ in range(n):
            result = nc_mul(result, self)
        return result

    def scale(self, c):
        c = _coerce(c, self.params)
        return NCPoly(
            {w: v * c for w, v in self.terms.items()}, self.params
        )

    def degree(self) -> int:
        """Maximal word length; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(len(w) for w in self.terms)

    def support(self):
        letters = set()
        for w in self.terms:
            letters.update(w)
        return letters

    def __repr__(self):
        return self.render()

    def render(self, order=None) -> str:
        """Canonical form: graded-lexicographic, shortest words first.

        ``order`` fixes the letter order (a presentation's generator list);
        by default letters compare by name.
        """
        if not self.terms:
            return "0"
        if order is None:
            rank = None
        else:
            rank = {g: i for i, g in enumerate(order)}

        def key(word):
            if rank is None:
                return (len(word), word)
            return (len(word), tuple(rank.get(g, len(rank)) for g in word))

        parts = []
        for n, word in enumerate(sorted(self.terms, key=key)):
            c = self.terms[word]
            body = _render_term(word, c)
            if n == 0:
                parts.append(body)
            else:
                if body.startswith("-"):
                    parts.append(f" - {body[1:]}")
                else:
                    parts.append(f" + {body}")
        return "".join(parts)


def _coerce(c, params):
    if params:
        if isinstance(c, MultiPoly):
            return c
        return MultiPoly.constant(Fraction(c), params)
    if isinstance(c, MultiPoly):
        return c.as_constant()
    return Fraction(c)


def _render_word(word) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        if j - i == 1:
            parts.append(word[i])
        else:
            parts.append(f"{word[i]}^{j - i}")
        i = j
    return "*".join(parts)


def _render_term(word, c) -> str:
    if isinstance(c, MultiPoly):
        if c.is_constant():
            c = c.constant_value()
        else:
            text = c.render()
            if len(c.terms) > 1:
                text = f"({text})"
            return text if not word else f"{text}*{_render_word(word)}"
    if not word:
        return str(c)
    if c == 1:
        return _render_word(word)
    if c == -1:
        return f"-{_render_word(word)}"
    return f"{c}*{_render_word(word)}"


def nc_mul(a: NCPoly, b: NCPoly) -> NCPoly:
    """Free product: bilinear concatenation of words."""
    a._check_ring(b)
    out = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            w = w1 + w2
            c = c1 * c2
            prev = out.get(w)
            out[w] = c if prev is None else prev + c
    return NCPoly(out, a.params)


def commutator(a: NCPoly, b: NCPoly) -> NCPoly:
    """ad a (b) = ab - ba."""
    return nc_mul(a, b) - nc_mul(b, a)


# -- parser ------------------------------------------------------------------
#
# expr     := '-'? term (('+'|'-') term)*
# term     := factor ('*' factor)*
# factor   := atom ('^' nat)?
# atom     := rational | ident | '(' expr ')'
# rational := int ('/' nat)?
#
# Whitespace is insignificant.  Identifiers must be alphabet generators or
# declared parameters.  A leading '-' is accepted so that rendered output
# re-parses to the same value.

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        if m.group("num") is not None:
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.group("ident") is not None:
            tokens.append(("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, alphabet, params):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.alphabet = set(alphabet)
        self.params = tuple(params)

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)
        return self.next()

    def parse(self) -> NCPoly:
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return value

    def expr(self) -> NCPoly:
        kind, val, _ = self.peek()
        negate = kind == "op" and val == "-"
        if negate:
            self.next()
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self) -> NCPoly:
        value = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                value = nc_mul(value, self.factor())
            else:
                return value

    def factor(self) -> NCPoly:
        value = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, val, pos = self.next()
            if kind != "num":
                raise ParseError("expected a natural number after '^'", pos)
            value = value ** int(val)
        return value

    def atom(self) -> NCPoly:
        kind, val, pos = self.next()
        if kind == "num":
            num = int(val)
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "/":
                self.next()
                kind3, val3, pos3 = self.next()
                if kind3 != "num":
                    raise ParseError("expected a denominator", pos3)
                return NCPoly({(): Fraction(num, int(val3))}, self.params)
            return NCPoly({(): Fraction(num)}, self.params)
        if kind == "ident":
            if val in self.alphabet:
                return NCPoly({(val,): Fraction(1)}, self.params)
            if val in self.params:
                return NCPoly(
                    {(): MultiPoly.variable(val)}, self.params
                )
            raise ParseError(f"unknown identifier {val!r}", pos)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(
            f"unexpected token {val!r}" if val else "unexpected end of input",
            pos,
        )


def parse(text: str, alphabet, params=()) -> NCPoly:
    """Parse an expression over the given alphabet.

    Raises :class:`ParseError` with a position on bad syntax or on an
    identifier that is neither a generator nor a declared parameter.
    """
    for g in alphabet:
        check_gen_name(g)
    return _Parser(text, alphabet, params).parse()


def apply_hom(a: NCPoly, images: dict):
    """Evaluate a polynomial under an assignment generator -> matrix.

    Words map to ordered products of the images and the unit word to the
    identity matrix; the extension is linear.  All images must be square of
    equal size and their scalar ring must contain the coefficients of ``a``.
    """
    if not images:
        raise ValueError("empty image assignment")
    sizes = {m.size for m in images.values()}
    if len(sizes) != 1:
        raise ValueError(f"image sizes differ: {sorted(sizes)}")
    from .matrep import TriMatrix

    p = sizes.pop()
    identity = TriMatrix.identity(p)
    result = TriMatrix.zeros(p)
    cache = {(): identity}
    for word, c in a.terms.items():
        mat = cache.get(word)
        if mat is None:
            # extend the longest cached prefix
            k = len(word) - 1
            while word[:k] not in cache:
                k -= 1
            mat = cache[word[:k]]
            for g in word[k:]:
                if g not in images:
                    raise KeyError(f"no image for generator {g!r}")
                mat = mat * images[g]
                k += 1
                cache[word[:k]] = mat
        result = result + mat.scale(c)
    return result
