"""Exact scalar arithmetic.

Everything the rest of the package computes with lives here: arbitrary
precision rationals (stdlib ``fractions.Fraction``), Gaussian rationals,
multivariate polynomials over named commutative parameters, and exponential
polynomials ``sum c * s^k * exp(i*d*s)`` in one real variable ``s``.

All values are immutable and all operations are pure; there is no floating
point anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction

# The rational scalars are stdlib Fractions: always normalized, positive
# denominator, zero is 0/1.  `str` already renders them canonically as
# "p/q" (or "p" when q == 1).
Rational = Fraction


def rat(x, y=None) -> Fraction:
    """Build a rational from ints, a string like ``3/2``, or pass through."""
    if y is not None:
        return Fraction(x, y)
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _as_gaussian(other).__sub__(self)

    def __mul__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


GAUSS_ZERO = GaussianRational(0, 0)
GAUSS_ONE = GaussianRational(1, 0)
GAUSS_I = GaussianRational(0, 1)


def _as_gaussian(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x, 0)
    return NotImplemented


class MultiPoly:
    """Multivariate commutative polynomial with rational coefficients.

    ``vars`` is the ordered tuple of variable names; ``terms`` maps exponent
    tuples (one slot per variable) to nonzero Fractions.  Arithmetic between
    polynomials over different variable lists aligns them on the union, so
    callers never have to pre-declare a common parameter list.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        vars = tuple(vars)
        clean = {}
        if terms:
            for expo, c in terms.items():
                c = Fraction(c)
                if not c:
                    continue
                expo = tuple(int(e) for e in expo)
                if len(expo) != len(vars):
                    raise ValueError(
                        f"exponent vector {expo} does not match variables {vars}"
                    )
                if any(e < 0 for e in expo):
                    raise ValueError(f"negative exponent in {expo}")
                prev = clean.get(expo)
                clean[expo] = c if prev is None else prev + c
        object.__setattr__(self, "vars", vars)
        object.__setattr__(
            self, "terms", {e: c for e, c in clean.items() if c}
        )

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def constant(cls, c, vars=()):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): Fraction(c)})

    @classmethod
    def variable(cls, name):
        return cls((name,), {(1,): Fraction(1)})

    # -- structure ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        """The coefficient of the constant monomial."""
        zero = (0,) * len(self.vars)
        return self.terms.get(zero, Fraction(0))

    def as_constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.constant_value()

    def total_degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name) -> int:
        if name not in self.vars or not self.terms:
            return 0
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def _signature(self):
        # Alignment-free canonical form: per monomial, the (var, exp) pairs
        # with nonzero exponent, name-sorted.
        sig = []
        for expo, c in self.terms.items():
            mono = tuple(
                sorted((v, e) for v, e in zip(self.vars, expo) if e)
            )
            sig.append((mono, c))
        return frozenset(sig)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    # -- arithmetic --------------------------------------------------------

    def _aligned(self, other):
        """Rewrite both operands over the union variable list."""
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other)
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vars = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return vars, self._embed(vars), other._embed(vars)

    def _embed(self, vars):
        if vars == self.vars:
            return self.terms
        pos = [vars.index(v) for v in self.vars]
        out = {}
        for expo, c in self.terms.items():
            new = [0] * len(vars)
            for p, e in zip(pos, expo):
                new[p] = e
            out[tuple(new)] = c
        return out

    def __add__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        vars, a, b = self._aligned(other)
        out = dict(a)
        for expo, c in b.items():
            prev = out.get(expo)
            out[expo] = c if prev is None else prev + c
        return MultiPoly(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        return self + (-other if isinstance(other, MultiPoly)
                       else MultiPoly.constant(-Fraction(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(
                self.vars, {e: v * c for e, v in self.terms.items()}
            )
        vars, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                prev = out.get(e)
                out[e] = c if prev is None else prev + c
        return MultiPoly(vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, bindings):
        """Polynomial composition.

        ``bindings`` maps variable names to MultiPoly (or rational) values.
        Names that do not occur in this polynomial's variable list are
        ignored; unbound variables stay symbolic.  The result's variable
        list is the union of the remaining and the substituted variables.
        """
        binds = {}
        for name, val in bindings.items():
            if name not in self.vars:
                continue
            if not isinstance(val, MultiPoly):
                val = MultiPoly.constant(val)
            binds[name] = val
        if not binds:
            return self
        kept = tuple(v for v in self.vars if v not in binds)
        images = {
            v: binds[v] if v in binds else MultiPoly.variable(v)
            for v in self.vars
        }
        result = MultiPoly(kept)
        for expo, c in self.terms.items():
            term = MultiPoly.constant(c, kept)
            for v, e in zip(self.vars, expo):
                if e:
                    term = term * (images[v] ** e)
            result = result + term
        return result

    def evaluate(self, assignment) -> Fraction:
        """Evaluate fully; every variable must be assigned a rational."""
        total = Fraction(0)
        for expo, c in self.terms.items():
            v = c
            for name, e in zip(self.vars, expo):
                if e:
                    v *= Fraction(assignment[name]) ** e
            total += v
        return total

    def coefficient(self, **powers) -> "MultiPoly":
        """Coefficient polynomial of the given variable powers.

        ``p.coefficient(x=2)`` collects all terms with x-exponent exactly 2
        and strips x from them.
        """
        idx = {self.vars.index(v): e for v, e in powers.items()
               if v in self.vars}
        for v in powers:
            if v not in self.vars and powers[v] != 0:
                return MultiPoly(())
        kept = tuple(v for i, v in enumerate(self.vars) if i not in idx)
        out = {}
        for expo, c in self.terms.items():
            if all(expo[i] == e for i, e in idx.items()):
                key = tuple(e for i, e in enumerate(expo) if i not in idx)
                out[key] = out.get(key, Fraction(0)) + c
        return MultiPoly(kept, out)

    def univariate_coeff(self, degree: int) -> Fraction:
        """Coefficient of x^degree for a polynomial in at most one variable."""
        live = [i for i, v in enumerate(self.vars)
                if any(e[i] for e in self.terms)]
        if len(live) > 1:
            raise ValueError(f"{self} is not univariate")
        if not self.terms:
            return Fraction(0)
        if not live:
            return self.constant_value() if degree == 0 else Fraction(0)
        i = live[0]
        for expo, c in self.terms.items():
            if expo[i] == degree:
                return c
        return Fraction(0)

    def reduce_pair(self, var_a: str, var_b: str) -> "MultiPoly":
        """Simplify using var_a * var_b = 1 (an adjoined inverse pair)."""
        if var_a not in self.vars or var_b not in self.vars:
            return self
        ia, ib = self.vars.index(var_a), self.vars.index(var_b)
        out = {}
        for expo, c in self.terms.items():
            m = min(expo[ia], expo[ib])
            if m:
                expo = tuple(
                    e - m if i in (ia, ib) else e for i, e in enumerate(expo)
                )
            out[expo] = out.get(expo, Fraction(0)) + c
        return MultiPoly(self.vars, out)

    def drop_unused(self) -> "MultiPoly":
        used = tuple(
            v for i, v in enumerate(self.vars)
            if any(e[i] for e in self.terms)
        )
        if used == self.vars:
            return self
        keep = [self.vars.index(v) for v in used]
        return MultiPoly(
            used,
            {tuple(e[i] for i in keep): c for e, c in self.terms.items()},
        )

    # -- rendering ----------------------------------------------------------

    def __repr__(self):
        return self.render()

    def render(self) -> str:
        """Canonical form: graded-lexicographic, leading term first."""
        if not self.terms:
            return "0"
        ordered = sorted(
            self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True
        )
        parts = []
        for n, (expo, c) in enumerate(ordered):
            factors = []
            for v, e in zip(self.vars, expo):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            coeff = abs(c)
            if mono and coeff == 1:
                body = mono
            elif mono:
                body = f"{coeff}*{mono}"
            else:
                body = str(coeff)
            if n == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)


def poly_substitute(p: MultiPoly, bindings) -> MultiPoly:
    """Exact polynomial composition; see :meth:`MultiPoly.substitute`."""
    return p.substitute(bindings)


class ExpPoly:
    """Exponential polynomial ``sum c * s^k * exp(i*d*s)``.

    ``terms`` maps pairs ``(k, d)`` (power, rational frequency) to nonzero
    GaussianRational coefficients; merging by ``(k, d)`` is canonical because
    the functions ``s^k e^{ids}`` are linearly independent over distinct
    pairs.  The growth degree of a triangular matrix exponential is read off
    as the maximal ``k``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (k, d), c in terms.items():
                if not isinstance(c, GaussianRational):
                    c = GaussianRational(c, 0)
                if not c:
                    continue
                key = (int(k), Fraction(d))
                if key[0] < 0:
                    raise ValueError("power k must be nonnegative")
                prev = clean.get(key)
                clean[key] = c if prev is None else prev + c
        object.__setattr__(
            self, "terms", {k: c for k, c in clean.items() if c}
        )

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    @classmethod
    def term(cls, c, k=0, d=0):
        return cls({(k, Fraction(d)): c if isinstance(c, GaussianRational)
                    else GaussianRational(c, 0)})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.term(1)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = ExpPoly.term(other)
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = ExpPoly.term(other)
        if not isinstance(other, ExpPoly):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
        return ExpPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = ExpPoly.term(other)
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = ExpPoly.term(other)
        if not isinstance(other, ExpPoly):
            return NotImplemented
        out = {}
        for (k1, d1), c1 in self.terms.items():
            for (k2, d2), c2 in other.terms.items():
                key = (k1 + k2, d1 + d2)
                c = c1 * c2
                prev = out.get(key)
                out[key] = c if prev is None else prev + c
        return ExpPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> "ExpPoly":
        out = {}
        for (k, d), c in self.terms.items():
            if k:
                key = (k - 1, d)
                v = c * k
                prev = out.get(key)
                out[key] = v if prev is None else prev + v
            if d:
                key = (k, d)
                v = c * GaussianRational(0, d)
                prev = out.get(key)
                out[key] = v if prev is None else prev + v
        return ExpPoly(out)

    def antiderivative(self) -> "ExpPoly":
        """The antiderivative vanishing at s = 0.

        Frequency zero raises the power (resonance); otherwise repeated
        integration by parts eats the power down to the exponential.
        """
        out = ExpPoly.zero()
        for (k, d), c in self.terms.items():
            if not d:
                out = out + ExpPoly.term(c * Fraction(1, k + 1), k + 1, 0)
                continue
            inv = GaussianRational(0, Fraction(-1, 1) / d)  # 1/(i*d)
            acc = {}
            coeff = c * inv
            power = k
            while True:
                prev = acc.get((power, d))
                acc[(power, d)] = coeff if prev is None else prev + coeff
                if power == 0:
                    break
                coeff = coeff * Fraction(-power, 1) * inv
                power -= 1
            f = ExpPoly(acc)
            # pin the value at s = 0 to zero
            out = out + f - ExpPoly.term(f.value_at_zero())
        return out

    def value_at_zero(self) -> GaussianRational:
        total = GAUSS_ZERO
        for (k, d), c in self.terms.items():
            if k == 0:
                total = total + c
        return total

    def reflect(self) -> "ExpPoly":
        """Substitute s -> -s."""
        return ExpPoly({
            (k, -d): (c if k % 2 == 0 else -c)
            for (k, d), c in self.terms.items()
        })

    def max_power(self) -> int:
        """Maximal s-power; zero for the zero element."""
        if not self.terms:
            return 0
        return max(k for (k, _) in self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (k, d) in sorted(self.terms, key=lambda t: (t[0], t[1])):
            c = self.terms[(k, d)]
            body = repr(c)
            if k:
                body += f"*s^{k}" if k > 1 else "*s"
            if d:
                body += f"*exp({d}*i*s)"
            parts.append(body)
        return " + ".join(parts)


def exppoly_mul(a: ExpPoly, b: ExpPoly) -> ExpPoly:
    return a * b


def exppoly_antiderivative(a: ExpPoly) -> ExpPoly:
    return a.antiderivative()
