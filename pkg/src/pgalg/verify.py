"""Named verification suites.

One suite per identity family keeps failures attributable; each suite
returns (ok, message) where the message names the first failing identity
on failure.  Randomized suites take a seed and a sample count and are
fully deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product as iproduct

from . import sampling
from .envelope import env_from_poly, env_mul, env_recompose, separation_rank
from .exactnum import MultiPoly
from .freealg import NCPoly, apply_hom, nc_mul
from .freelie import Decomposed, compose, g2, expand_g, slot_vars
from .matrep import (
    FreeWord,
    TriMatrix,
    build_free_rep,
    build_qplane_rep,
    build_sl2_rep,
    emat,
    free_upper_right,
    in_c2,
    kmat,
    reduce_sl2,
    theta_images,
    upper_right_qplane,
)
from .pgrowth import (
    invert_upper,
    radical_report,
    random_invertible_upper,
)
from .presentations import (
    Presentation,
    normal_form,
    qplane_decompose,
    qplane_recompose,
    sl2_eliminate_d,
)

XY = ("x", "y")
E12 = ("e1", "e2")


def _all_words(gens, max_len):
    for n in range(max_len + 1):
        yield from iproduct(gens, repeat=n)


def suite_qplane_basis(seed=0, samples=200, q=None, p_max=8):
    """Matrix relation K_p E_p = q E_p K_p, no basis collapse up to length
    6, and associativity of the normal form product."""
    rng = random.Random(seed)
    qs = [Fraction(q)] if q is not None else \
        [sampling.nonzero_q(rng) for _ in range(10)]
    for qq in qs:
        for p in range(1, p_max + 1):
            if kmat(p, qq) * emat(p) != (emat(p) * kmat(p, qq)).scale(qq):
                return False, f"K_p E_p != q E_p K_p at p={p}, q={qq}"
    for qq in qs[:3]:
        pres = Presentation.qplane(qq)
        for word in _all_words(XY, 6):
            nf = normal_form(NCPoly.word(word), pres)
            if len(nf.terms) != 1:
                return False, f"word {word} does not normalize to a monomial"
            (nw, coeff), = nf.terms.items()
            xcount = sum(1 for g in nw if g == "x")
            if nw != ("x",) * xcount + ("y",) * (len(nw) - xcount):
                return False, f"normal form of {word} is not ordered"
            if len(nw) != len(word):
                return False, f"normal form of {word} changed degree"
            if nw == word and coeff != 1:
                return False, f"basis word {word} rescaled by {coeff}"
    pres = Presentation.qplane(qs[0])
    for n in range(samples):
        a = sampling.ncpoly(rng, XY, max_len=5)
        b = sampling.ncpoly(rng, XY, max_len=5)
        c = sampling.ncpoly(rng, XY, max_len=5)
        lhs = normal_form(nc_mul(a, nc_mul(b, c)), pres)
        rhs = normal_form(nc_mul(nc_mul(a, b), c), pres)
        if lhs != rhs:
            return False, f"associativity failed at sample {n}"
    return True, (f"relation at p <= {p_max} for {len(qs)} values of q; "
                  f"no basis collapse to length 6; associativity on "
                  f"{samples} triples")


def suite_urepi(seed=0, samples=200, q=None, p_max=5):
    """Closed corner formulas against direct matrix evaluation."""
    rng = random.Random(seed)
    qq = Fraction(q) if q is not None else sampling.nonzero_q(rng)
    for n in range(samples):
        p = rng.randint(1, p_max)
        variant = rng.choice(("plain", "primed"))
        e = sampling.qplane_element(rng, max_row=p, max_deg=4)
        predicted = upper_right_qplane(e, p, variant, qq)
        rep = build_qplane_rep(p, variant, qq)
        direct = apply_hom(qplane_recompose(e, qq), rep).upper_right
        if predicted != direct:
            return False, (f"corner mismatch at sample {n} "
                           f"(p={p}, {variant}, q={qq})")
    return True, f"{samples} corner evaluations match, both variants, q={qq}"


def _sl2_relations(q):
    """The defining relations, as elements that must vanish.

    Over a, b, c, d: three q-commutations, two with d, and the two
    determinant equations; over the reduced alphabet, the inverse pair."""
    q = Fraction(q)
    rels = {
        "ab=q*ba": {("a", "b"): 1, ("b", "a"): -q},
        "ac=q*ca": {("a", "c"): 1, ("c", "a"): -q},
        "bc=cb": {("b", "c"): 1, ("c", "b"): -1},
        "bd=q*db": {("b", "d"): 1, ("d", "b"): -q},
        "cd=q*dc": {("c", "d"): 1, ("d", "c"): -q},
        "da-bc/q=1": {("d", "a"): 1, ("b", "c"): -1 / q, (): -1},
        "ad-q*bc=1": {("a", "d"): 1, ("b", "c"): -q, (): -1},
        "a*ai=1": {("a", "ai"): 1, (): -1},
        "ai*a=1": {("ai", "a"): 1, (): -1},
    }
    return {name: NCPoly(terms) for name, terms in rels.items()}


def suite_sl2_relations(seed=0, q=None, p_max=4, **_):
    """Eliminating d sends every relation to zero, and the triangular
    representations kill all of them symbolically."""
    rng = random.Random(seed)
    qq = Fraction(q) if q is not None else sampling.nonzero_q(rng)
    rels = _sl2_relations(qq)
    for name, rel in rels.items():
        if sl2_eliminate_d(rel, qq):
            return False, f"elimination of d does not kill {name}"
    for p in range(1, p_max + 1):
        images = build_sl2_rep(p, qq)
        zero = TriMatrix.zeros(p)
        for name, rel in rels.items():
            if reduce_sl2(apply_hom(rel, images)) != zero:
                return False, f"representation p={p} does not kill {name}"
    return True, (f"d-elimination and all representations p <= {p_max} "
                  f"kill every relation, q={qq}")


def _laurent_eval(laurent, point_pos, point_neg, qpow_base):
    """Evaluate sum_n c_n a^n at lam*q^r: positive n use lam, negative
    use lami, with the matching power of q."""
    total = MultiPoly.constant(0)
    for n, c in laurent.items():
        if n >= 0:
            total = total + c * (qpow_base ** n) * (point_pos ** n)
        else:
            total = total + c * (qpow_base ** n) * (point_neg ** (-n))
    return total


def suite_slmat(seed=0, q=None, p=3, samples=5, **_):
    """The size-p image of sum f_ij(a) b^i c^j has the expected band
    structure, entry by entry, for random Laurent coefficients."""
    rng = random.Random(seed)
    qq = Fraction(q) if q is not None else sampling.nonzero_q(rng)
    lam, lami = MultiPoly.variable("lam"), MultiPoly.variable("lami")
    mu, nu = MultiPoly.variable("mu"), MultiPoly.variable("nu")
    images = build_sl2_rep(p, qq)
    for n in range(samples):
        fs = {}
        for i in range(p):
            for j in range(p - i):
                fs[(i, j)] = {
                    d: sampling.fraction(rng)
                    for d in range(-2, 3) if rng.random() < 0.5
                }
        element = NCPoly.zero()
        for (i, j), laurent in fs.items():
            for d, c in laurent.items():
                head = ("a",) * d if d >= 0 else ("ai",) * (-d)
                element = element + NCPoly.word(
                    head + ("b",) * i + ("c",) * j, c
                )
        got = reduce_sl2(apply_hom(element, images))
        for r in range(p):
            for col in range(r, p):
                s = col - r
                want = MultiPoly.constant(0)
                for (i, j), laurent in fs.items():
                    if i + j != s:
                        continue
                    want = want + _laurent_eval(
                        laurent, lam, lami, qq ** (p - 1 - r)
                    ) * mu ** i * nu ** j
                if got.entry(r, col) != want:
                    return False, (f"entry ({r},{col}) mismatch at sample "
                                   f"{n}, q={qq}")
    return True, f"band structure matches entry-by-entry at p={p}, q={qq}"


def _betas(max_total):
    return [(b1, b2) for b1 in range(max_total + 1)
            for b2 in range(max_total + 1 - b1)]


def suite_onefactre(m=4, beta_total=3, **_):
    """theta_w(g_beta) has superdiagonal (-1)^(b1+1) s^(b1+1) t^(b2), up to
    an error vanishing on the first two diagonals."""
    for mm in range(1, m + 1):
        w = FreeWord.symbolic(mm)
        images = theta_images(w)
        for b1, b2 in _betas(beta_total):
            got = apply_hom(expand_g(g2(b1, b2), 2), images)
            sign = Fraction(-1) ** (b1 + 1)
            expected = TriMatrix.superdiagonal([
                sign * MultiPoly.variable(f"s{p}") ** (b1 + 1)
                * MultiPoly.variable(f"t{p}") ** b2
                for p in range(1, mm + 1)
            ])
            if not in_c2(got - expected):
                return False, f"residual not in c2 at m={mm}, beta={(b1, b2)}"
    return True, (f"superdiagonal law holds for m <= {m}, "
                  f"|beta| <= {beta_total} (sign = -1 per even beta1 power, "
                  f"i.e. (-1)^(beta1+1))")


def suite_manyQk(m=4, beta_total=2, **_):
    """Products of generator images land on the corner with the predicted
    sign-adjusted monomial."""
    betas = _betas(beta_total)
    for mm in range(1, m + 1):
        w = FreeWord.symbolic(mm)
        images = theta_images(w)
        theta = {b: apply_hom(expand_g(g2(*b), 2), images) for b in betas}
        size = mm + 1
        corner = TriMatrix.corner_unit(size)

        def walk(prefix_mat, factors_left, mono):
            if factors_left == 0:
                expected = corner.scale(mono)
                if prefix_mat != expected:
                    return f"corner law fails at m={mm}"
                return None
            p = mm + 1 - factors_left
            for b in betas:
                piece = (MultiPoly.variable(f"s{p}") ** (b[0] + 1)
                         * MultiPoly.variable(f"t{p}") ** b[1]
                         * (Fraction(-1) ** (b[0] + 1)))
                err = walk(prefix_mat * theta[b], factors_left - 1,
                           mono * piece)
                if err:
                    return err
            return None

        err = walk(TriMatrix.identity(size), mm,
                   MultiPoly.constant(1))
        if err:
            return False, err
    return True, f"PASS data: m <= {m}, |beta| <= {beta_total} per factor"


def suite_manyQwek(seed=0, samples=100, m=3, **_):
    """Corner of the image of a slot-m element against the closed form,
    for words of length m."""
    rng = random.Random(seed)
    for n in range(samples):
        mm = rng.randint(0, m)
        w = FreeWord.symbolic(mm)
        d = sampling.decomposed(rng, max_deg=2, max_terms=3, slot=mm)
        predicted = free_upper_right(d, None, w)
        rep = build_free_rep(None, w)
        direct = apply_hom(compose(d), rep).upper_right
        if predicted != direct:
            return False, f"corner mismatch at sample {n} (m={mm})"
    return True, f"{samples} corner identities match for m <= {m}"


def suite_annh(m=4, seed=0, samples=5, **_):
    """Slots longer than the word length map to the zero matrix."""
    rng = random.Random(seed)
    for m_word in range(0, m):
        rep = build_free_rep(None, FreeWord.symbolic(m_word))
        zero = TriMatrix.zeros(m_word + 1)
        for m_slot in range(m_word + 1, m + 1):
            cases = [Decomposed({m_slot: MultiPoly.constant(
                1, slot_vars(m_slot))})]
            for _ in range(samples):
                cases.append(sampling.decomposed(
                    rng, max_deg=2, max_terms=2, slot=m_slot
                ))
            for d in cases:
                if apply_hom(compose(d), rep) != zero:
                    return False, (f"image not zero for word length "
                                   f"{m_word}, slot {m_slot}")
    return True, f"vanishing holds for word length < slot <= {m}"


def suite_radpg(p_max=6, samples=100, seed=0, **_):
    """Commutators strictly upper and nilpotent; q-commuting products
    nilpotent."""
    for p in range(1, p_max + 1):
        report = radical_report(p, samples=samples, seed=seed + p)
        if not report.passed:
            return False, f"p={p}: {report.failures[0]}"
    return True, (f"radical structure verified for p <= {p_max}, "
                  f"{samples} samples each")


def suite_qudi(samples=50, seed=0, p_max=6, **_):
    """A one-sided inverse of an invertible triangular matrix is two-sided."""
    rng = random.Random(seed)
    for n in range(samples):
        p = rng.randint(2, p_max)
        m = random_invertible_upper(rng, p)
        left = invert_upper(m)
        one = TriMatrix.identity(p)
        if left * m != one:
            return False, f"sample {n}: NM != 1"
        if m * left != one:
            return False, f"sample {n}: NM = 1 but MN != 1"
    return True, f"one-sided inverses are two-sided on {samples} samples"


def _random_env(rng, algebra, n, q):
    if algebra == "qplane":
        a = sampling.ncpoly(rng, XY, max_len=3, max_terms=3)
        return env_from_poly(a, algebra, n, q)
    if algebra == "sl2":
        a = sampling.ncpoly(rng, ("a", "ai", "b", "c"), max_len=3,
                            max_terms=3)
        return env_from_poly(a, algebra, n, q)
    d = sampling.decomposed(rng, max_slot=1, max_deg=1, max_terms=2)
    return env_from_poly(compose(d), algebra, n)


def suite_envelope_assoc(seed=0, samples=100, q=None, n_trunc=4, **_):
    """Associativity, unitality, multiplicativity of the embedding,
    truncation compatibility, and the commutative degeneration at q = 1."""
    rng = random.Random(seed)
    qq = Fraction(q) if q is not None else sampling.nonzero_q(rng)
    for algebra in ("qplane", "sl2", "free"):
        use_q = None if algebra == "free" else qq
        unit = env_from_poly(NCPoly.unit(), algebra, n_trunc, use_q)
        for n in range(samples):
            x = _random_env(rng, algebra, n_trunc, use_q)
            y = _random_env(rng, algebra, n_trunc, use_q)
            z = _random_env(rng, algebra, n_trunc, use_q)
            if env_mul(env_mul(x, y), z) != env_mul(x, env_mul(y, z)):
                return False, f"{algebra}: associativity fails at sample {n}"
            if env_mul(unit, x) != x or env_mul(x, unit) != x:
                return False, f"{algebra}: unit fails at sample {n}"
            # multiplicativity of the embedding
            a = env_recompose(x)
            b = env_recompose(y)
            if env_from_poly(nc_mul(a, b), algebra, n_trunc, use_q) \
                    != env_mul(x, y):
                return False, (f"{algebra}: embedding not multiplicative "
                               f"at sample {n}")
            # truncation compatibility: quotient maps commute with products
            big = env_mul(
                env_from_poly(a, algebra, 6, use_q),
                env_from_poly(b, algebra, 6, use_q),
            )
            small = env_mul(x.truncate(3), y.truncate(3))
            if big.truncate(3) != small:
                return False, (f"{algebra}: truncation compatibility fails "
                               f"at sample {n}")
    # commutative degeneration
    for n in range(samples):
        a = sampling.ncpoly(rng, XY, max_len=3, max_terms=3)
        b = sampling.ncpoly(rng, XY, max_len=3, max_terms=3)
        big_n = 12
        got = env_mul(env_from_poly(a, "qplane", big_n, 1),
                      env_from_poly(b, "qplane", big_n, 1))
        want = env_from_poly(nc_mul(a, b), "qplane", big_n, 1)
        if got != want:
            return False, f"q=1 degeneration fails at sample {n}"
        commutative = _commutative_product(a, b)
        if env_from_poly(commutative, "qplane", big_n, 1) != want:
            return False, (f"q=1 product disagrees with the commutative "
                           f"oracle at sample {n}")
    return True, (f"all three models: associative, unital, multiplicative "
                  f"embedding, truncation-compatible on {samples} triples; "
                  f"q=1 is commutative polynomial multiplication")


def _commutative_product(a: NCPoly, b: NCPoly) -> NCPoly:
    """Multiply in R[x, y] and write the result as ordered words."""
    def to_pairs(poly):
        out = {}
        for word, c in poly.terms.items():
            i = sum(1 for g in word if g == "x")
            j = len(word) - i
            out[(i, j)] = out.get((i, j), Fraction(0)) + c
        return out

    pa, pb = to_pairs(a), to_pairs(b)
    out = {}
    for (i1, j1), c1 in pa.items():
        for (i2, j2), c2 in pb.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return NCPoly({
        ("x",) * i + ("y",) * j: c for (i, j), c in out.items()
    })


def suite_separation(q=None, degree=3, seed=0, **_):
    """Full rank of the evaluation maps at filtration degree <= degree."""
    rng = random.Random(seed)
    qq = Fraction(q) if q is not None else sampling.nonzero_q(rng)
    lines = []
    for algebra in ("qplane", "sl2", "free"):
        use_q = None if algebra == "free" else qq
        for d in range(degree + 1):
            report = separation_rank(algebra, use_q, d)
            if not report.injective:
                return False, report.summary()
            lines.append(report.summary())
    return True, "; ".join(lines)


SUITES = {
    "qplane-basis": suite_qplane_basis,
    "urepi": suite_urepi,
    "sl2-relations": suite_sl2_relations,
    "slmat": suite_slmat,
    "onefactre": suite_onefactre,
    "manyQk": suite_manyQk,
    "manyQwek": suite_manyQwek,
    "annh": suite_annh,
    "radpg": suite_radpg,
    "qudi": suite_qudi,
    "envelope-assoc": suite_envelope_assoc,
    "separation": suite_separation,
}
