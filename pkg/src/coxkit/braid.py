"""Braid words, Burau matrices, Artin action, longitudes, Magnus expansion
and Milnor invariants of pure braids.

Free-group words are tuples of signed 1-based generator indices.  Positive
generator s_k crosses the strand at position k+1 over the strand at
position k; the meridian bookkeeping below and the zero-framing convention
of the longitudes are pinned jointly by the Hopf string link, whose Milnor
invariants ending in (1, 1) are (-1)^(k+1) on all-ones index strings and 0
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import (Laurent, Poly, RatFunc, TruncSeries, det_exact,
                      series_sqrt1p)
from .errors import (DomainError, NotPure, StrandMismatch, UnknownClosure)
from .report import IdentityReport

Word = tuple[int, ...]


# ---------------------------------------------------------------------------
# braid words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BraidWord:
    """Word in the standard generators of the braid group on n strands."""

    strands: int
    word: Word = ()

    def __post_init__(self):
        if self.strands < 1:
            raise DomainError("need at least one strand")
        for g in self.word:
            if g == 0 or abs(g) >= self.strands:
                raise DomainError(f"generator {g} out of range")
        object.__setattr__(self, "word", tuple(self.word))

    @staticmethod
    def parse(text: str, strands: int | None = None) -> "BraidWord":
        """Parse whitespace-separated tokens sK / -sK (1-based K)."""
        letters = []
        for tok in text.split():
            neg = tok.startswith("-")
            body = tok[1:] if neg else tok
            if not body.startswith("s"):
                raise DomainError(f"bad braid token {tok!r}")
            k = int(body[1:])
            letters.append(-k if neg else k)
        if strands is None:
            strands = max((abs(g) for g in letters), default=1) + 1
        return BraidWord(strands, tuple(letters))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise StrandMismatch("cannot concatenate different strand counts")
        return BraidWord(self.strands, self.word + other.word)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.word)))

    def permutation(self) -> tuple[int, ...]:
        """pi with pi[p] = strand ending at position p (0-based strands)."""
        pos = list(range(self.strands))
        for g in self.word:
            k = abs(g) - 1
            pos[k], pos[k + 1] = pos[k + 1], pos[k]
        return tuple(pos)

    @property
    def is_pure(self) -> bool:
        return self.permutation() == tuple(range(self.strands))

    def exponent_sum(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.word)


def linking_matrix(b: BraidWord) -> dict[tuple[int, int], int]:
    """Half the signed crossing count between each strand pair (1-based)."""
    pos = list(range(b.strands))
    counts: dict[tuple[int, int], int] = {}
    for g in b.word:
        k = abs(g) - 1
        s, t = pos[k], pos[k + 1]
        key = (min(s, t) + 1, max(s, t) + 1)
        counts[key] = counts.get(key, 0) + (1 if g > 0 else -1)
        pos[k], pos[k + 1] = pos[k + 1], pos[k]
    if any(v % 2 for v in counts.values()) and b.is_pure:
        raise ArithmeticError("odd crossing count on a pure braid")
    return {k: v // 2 for k, v in counts.items()}


# ---------------------------------------------------------------------------
# Burau representation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BurauImage:
    kind: str
    strands: int
    entries: tuple[tuple[Laurent, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)


def _identity(n: int) -> list[list[Laurent]]:
    return [[Laurent.one() if i == j else Laurent.zero() for j in range(n)]
            for i in range(n)]


def _unreduced_gen(n: int, g: int) -> list[list[Laurent]]:
    m = _identity(n)
    k = abs(g) - 1
    t, tinv = Laurent.q(1), Laurent.q(-1)
    one = Laurent.one()
    if g > 0:
        m[k][k] = one - t
        m[k][k + 1] = t
        m[k + 1][k] = one
        m[k + 1][k + 1] = Laurent.zero()
    else:
        m[k][k] = Laurent.zero()
        m[k][k + 1] = one
        m[k + 1][k] = tinv
        m[k + 1][k + 1] = one - tinv
    return m


def _reduced_gen(n: int, g: int) -> list[list[Laurent]]:
    m = _identity(n - 1)
    k = abs(g) - 1
    t, tinv = Laurent.q(1), Laurent.q(-1)
    if g > 0:
        m[k][k] = -t
        if k > 0:
            m[k][k - 1] = t
        if k + 1 < n - 1:
            m[k][k + 1] = Laurent.one()
    else:
        m[k][k] = -tinv
        if k > 0:
            m[k][k - 1] = Laurent.one()
        if k + 1 < n - 1:
            m[k][k + 1] = tinv
    return m


def _mat_mul(a, b):
    n, p = len(a), len(b[0]) if b else 0
    out = [[Laurent.zero()] * p for _ in range(n)]
    for i in range(n):
        for k in range(len(b)):
            x = a[i][k]
            if x.is_zero:
                continue
            for j in range(p):
                y = b[k][j]
                if not y.is_zero:
                    out[i][j] = out[i][j] + x * y
    return out


def burau(b: BraidWord, reduced: bool = False) -> BurauImage:
    """Image of the braid word; multiplicative over concatenation."""
    n = b.strands
    size = n - 1 if reduced else n
    acc = _identity(size)
    gen = _reduced_gen if reduced else _unreduced_gen
    for g in b.word:
        acc = _mat_mul(acc, gen(n, g))
    return BurauImage("reduced" if reduced else "unreduced", n,
                      tuple(tuple(row) for row in acc))


def det_one_minus(img: BurauImage) -> Laurent:
    """det(E - beta)."""
    m = [[(Laurent.one() if i == j else Laurent.zero()) - img.entries[i][j]
          for j in range(img.size)] for i in range(img.size)]
    return det_exact(m)


def det_ratio(l_word: BraidWord, b_word: BraidWord,
              reduced: bool = True) -> RatFunc:
    """det(E - beta(L)) / det(E - beta(B L)) as a reduced rational function.

    The unreduced image fixes the all-ones vector, making both determinants
    vanish identically, so the reduced representation is the meaningful
    default; a zero numerator or denominator marks the degenerate cases.
    """
    if l_word.strands != b_word.strands:
        raise StrandMismatch("strand counts differ")
    top = det_one_minus(burau(l_word, reduced))
    bot = det_one_minus(burau(b_word * l_word, reduced))
    if bot.is_zero:
        raise UnknownClosure("denominator determinant vanishes")
    return RatFunc(top, bot)


def unit_match(a: RatFunc, b: RatFunc) -> tuple[int, int] | None:
    """If a = sign * q^k * b, return (sign, k); otherwise None."""
    return (a.num * b.den).is_unit_multiple_of(b.num * a.den)


# ---------------------------------------------------------------------------
# free-group words and the Artin action
# ---------------------------------------------------------------------------

def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def word_inverse(word: Sequence[int]) -> Word:
    return tuple(-g for g in reversed(word))


def artin_action(b: BraidWord) -> tuple[Word, ...]:
    """Images of the free generators: s_i sends x_i to x_i x_{i+1} x_i^-1
    and x_{i+1} to x_i; composition follows the word left to right."""
    n = b.strands
    images: list[Word] = [(i + 1,) for i in range(n)]

    def gen_image(g: int, x: int) -> Word:
        i = abs(g)
        if g > 0:
            if x == i:
                return (i, i + 1, -i)
            if x == i + 1:
                return (i,)
        else:
            if x == i:
                return (i + 1,)
            if x == i + 1:
                return (-(i + 1), i, i + 1)
        return (x,)

    for g in b.word:
        new_images = []
        for img in images:
            word: list[int] = []
            for letter in img:
                piece = gen_image(g, abs(letter))
                word.extend(piece if letter > 0 else word_inverse(piece))
            new_images.append(free_reduce(word))
        images = new_images
    return tuple(images)


# ---------------------------------------------------------------------------
# longitudes of a pure braid
# ---------------------------------------------------------------------------

def longitudes(b: BraidWord) -> tuple[Word, ...]:
    """Zero-linking longitudes read at the bottom of the cylinder.

    Walk the word tracking the meridian of every position (the Wirtinger
    update keeps the left-to-right meridian product constant); each time
    strand i passes under it collects the over-strand's meridian with the
    crossing sign.  The raw word L is then framed as x_i^-1 L x_i^(1-e)
    with e the exponent sum of L, which makes the linking number with the
    union of all strands zero.
    """
    if not b.is_pure:
        raise NotPure("longitudes need a pure braid")
    n = b.strands
    merid: list[Word] = [(p + 1,) for p in range(n)]
    strand_at: list[int] = list(range(n))
    raw: list[list[int]] = [[] for _ in range(n)]
    for g in b.word:
        k = abs(g) - 1
        if g > 0:
            over_pos, under_pos = k + 1, k
        else:
            over_pos, under_pos = k, k + 1
        m_over = merid[over_pos]
        picked = m_over if g > 0 else word_inverse(m_over)
        raw[strand_at[under_pos]].extend(picked)
        if g > 0:
            new_k = merid[k + 1]
            new_k1 = free_reduce(word_inverse(merid[k + 1]) + merid[k]
                                 + merid[k + 1])
        else:
            new_k1 = merid[k]
            new_k = free_reduce(merid[k] + merid[k + 1]
                                + word_inverse(merid[k]))
        merid[k], merid[k + 1] = new_k, new_k1
        strand_at[k], strand_at[k + 1] = strand_at[k + 1], strand_at[k]
    out = []
    for i in range(n):
        body = free_reduce(raw[i])
        e = sum(1 if g > 0 else -1 for g in body)
        gen = i + 1
        framed = (-gen,) + body + ((gen,) * (1 - e) if e <= 1
                                   else (-gen,) * (e - 1))
        out.append(free_reduce(framed))
    return tuple(out)


# ---------------------------------------------------------------------------
# Magnus expansion
# ---------------------------------------------------------------------------

class MagnusSeries:
    """Truncated series in noncommuting variables u_1..u_n with integer
    coefficients; keys are tuples of 1-based variable indices."""

    __slots__ = ("nvars", "order", "_c")

    def __init__(self, nvars: int, order: int, coeffs=None):
        self.nvars = nvars
        self.order = order
        self._c: dict[Word, int] = dict(coeffs) if coeffs else {}

    @staticmethod
    def one(nvars: int, order: int) -> "MagnusSeries":
        return MagnusSeries(nvars, order, {(): 1})

    @staticmethod
    def generator(nvars: int, order: int, letter: int) -> "MagnusSeries":
        """Image of x_i (letter > 0) or x_i^-1 (letter < 0)."""
        i = abs(letter)
        if letter > 0:
            return MagnusSeries(nvars, order, {(): 1, (i,): 1})
        coeffs = {(i,) * k: (-1) ** k for k in range(order + 1)}
        return MagnusSeries(nvars, order, coeffs)

    def coefficient(self, word: Sequence[int]) -> int:
        return self._c.get(tuple(word), 0)

    def items(self):
        return tuple(sorted(self._c.items()))

    def __mul__(self, other: "MagnusSeries") -> "MagnusSeries":
        out: dict[Word, int] = {}
        for wa, ca in self._c.items():
            room = self.order - len(wa)
            for wb, cb in other._c.items():
                if len(wb) > room:
                    continue
                key = wa + wb
                val = out.get(key, 0) + ca * cb
                if val:
                    out[key] = val
                elif key in out:
                    del out[key]
        return MagnusSeries(self.nvars, self.order, out)

    def __sub__(self, other: "MagnusSeries") -> "MagnusSeries":
        out = dict(self._c)
        for k, v in other._c.items():
            nv = out.get(k, 0) - v
            if nv:
                out[k] = nv
            elif k in out:
                del out[k]
        return MagnusSeries(self.nvars, self.order, out)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, MagnusSeries) and self._c == other._c
                and self.order == other.order)

    @property
    def is_zero(self) -> bool:
        return not self._c

    def __repr__(self) -> str:
        return f"MagnusSeries({dict(self.items())!r})"


def magnus(word: Sequence[int], nvars: int, order: int) -> MagnusSeries:
    """Magnus embedding x_i -> 1 + u_i, truncated at total degree order."""
    acc = MagnusSeries.one(nvars, order)
    for letter in word:
        acc = acc * MagnusSeries.generator(nvars, order, letter)
    return acc


# ---------------------------------------------------------------------------
# Milnor invariants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MilnorTable:
    """mu indexed by (i_1, ..., i_r, i): the coefficient of u_{i_1}..u_{i_r}
    in the expanded longitude of strand i, for r + 1 <= order."""

    strands: int
    order: int
    entries: dict[Word, int]

    def mu(self, *index: int) -> int:
        return self.entries.get(tuple(index), 0)

    def first_nonzero_length(self) -> int | None:
        lengths = [len(k) for k, v in self.entries.items() if v]
        return min(lengths) if lengths else None

    def at_length(self, length: int) -> dict[Word, int]:
        return {k: v for k, v in self.entries.items()
                if len(k) == length and v}


def milnor(b: BraidWord, order: int) -> MilnorTable:
    if order < 1:
        raise DomainError("order must be >= 1")
    if not b.is_pure:
        raise NotPure("Milnor invariants need a pure braid")
    entries: dict[Word, int] = {}
    for i, lon in enumerate(longitudes(b), start=1):
        series = magnus(lon, b.strands, order - 1)
        for word, coeff in series.items():
            if word and coeff:
                entries[word + (i,)] = coeff
    return MilnorTable(b.strands, order, entries)


# ---------------------------------------------------------------------------
# Alexander-Conway catalog for 2-braid closures
# ---------------------------------------------------------------------------

def conway_from_seifert(v_mat) -> Poly:
    """Conway polynomial det(qV - q^-1 V^t) of a Seifert matrix, written
    in the variable t = q - 1/q."""
    size = len(v_mat)
    q, qinv = Laurent.q(1), Laurent.q(-1)
    m = [[q * Laurent.const(v_mat[i][j]) - qinv * Laurent.const(v_mat[j][i])
          for j in range(size)] for i in range(size)]
    return laurent_to_t_poly(det_exact(m))


def conway_torus2(k: int) -> Poly:
    """Conway polynomial (variable t = q - 1/q) of the closure of s1^k.

    Computed from the bidiagonal Seifert matrix of the k-banded annulus;
    the sign convention makes the k = 2 Hopf value equal -t, and negative
    k mirrors by t -> -t.  k = 0 is the split unlink (zero), |k| = 1 the
    unknot (one).
    """
    if k == 0:
        return Poly.zero()
    size = abs(k) - 1
    if size == 0:
        return Poly.one()
    v_mat = [[(-1 if i == j else (1 if j == i + 1 else 0))
              for j in range(size)] for i in range(size)]
    t_poly = conway_from_seifert(v_mat)
    if k < 0:
        t_poly = Poly(tuple(c if i % 2 == 0 else -c
                            for i, c in enumerate(t_poly.coeffs)))
    return t_poly


def laurent_to_t_poly(p: Laurent) -> Poly:
    """Rewrite a Laurent polynomial lying in Z[q - 1/q] as a dense
    polynomial in t."""
    t = Laurent.q(1) - Laurent.q(-1)
    rem = p
    out: list[int] = []
    while not rem.is_zero:
        d = rem.max_exp
        if d < 0:
            raise DomainError("not a polynomial in q - 1/q")
        c = rem.coeff(d)
        while len(out) <= d:
            out.append(0)
        out[d] = c
        rem = rem - c * t ** d
    return Poly(out)


def t_poly_to_laurent(p: Poly) -> Laurent:
    t = Laurent.q(1) - Laurent.q(-1)
    acc = Laurent.zero()
    for c in reversed(p.coeffs):
        acc = acc * t + Laurent.const(c)
    return acc


# ---------------------------------------------------------------------------
# the surgery series identity for two-strand string links
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LevinReport:
    lhs: TruncSeries
    rhs: TruncSeries
    holds: bool
    degenerate: bool


def levin_check(b: BraidWord, order: int,
                conway_v: Poly | None = None,
                conway_h: Poly | None = None) -> LevinReport:
    """Compare the Alexander-Conway ratio of the two closures of a pure
    2-strand braid with its Milnor-invariant series.

    Vertical closure over horizontal closure, expanded in u through the
    substitution q - 1/q = u (1+u)^(-1/2), must equal
    (1+u)^(1/2) * sum_k (sum over index words mu_{i_1..i_k,1,1}) u^(k+1).
    Closure polynomials default to the torus catalog (the horizontal
    closure of any pure 2-braid is an unknot).
    """
    if b.strands != 2:
        raise DomainError("the series identity is implemented for 2 strands")
    if not b.is_pure:
        raise NotPure("need a pure braid")
    half_twists = b.exponent_sum()
    if conway_v is None:
        conway_v = conway_torus2(half_twists)
    if conway_h is None:
        conway_h = Poly.one()
    if conway_h.is_zero:
        raise UnknownClosure("horizontal closure has zero polynomial")
    sqrt = series_sqrt1p(order)
    t_series = TruncSeries.u(order) * sqrt.inverse()
    lhs = t_series.compose_poly(conway_v.coeffs) * \
        t_series.compose_poly(conway_h.coeffs).inverse()
    series = magnus(longitudes(b)[0], 2, order)
    sums = [0] * (order + 1)
    for word, coeff in series.items():
        if word and word[-1] == 1 and len(word) <= order:
            sums[len(word)] += coeff
    rhs = sqrt * TruncSeries(order, sums)
    residual = lhs - rhs
    degenerate = conway_v.is_zero
    return LevinReport(lhs, rhs, residual.is_zero, degenerate)


def levin_report(b: BraidWord, order: int) -> IdentityReport:
    rep = levin_check(b, order)
    return IdentityReport("levin-series", rep.lhs, rep.rhs,
                          rep.lhs - rep.rhs, rep.holds)
