"""Exact arithmetic kernel.

Integer Laurent polynomials in one variable (sparse), dense integer
polynomials (the z-world), integer Laurent polynomials in two variables
(x, y), truncated power series with rational coefficients, and rational
functions kept in reduced canonical form.  All values are immutable and
every operation is exact; no floating point enters anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import ExactDivisionError, NotSymmetric, ZeroDenominator


# ---------------------------------------------------------------------------
# dense integer polynomial helpers (shared by Poly and the Laurent kernel)
# ---------------------------------------------------------------------------

def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _list_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _list_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _list_exact_div(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Exact division in Z[x]; raises if b does not divide a."""
    if not b:
        raise ExactDivisionError("division by zero polynomial")
    if not a:
        return ()
    rem = list(a)
    quot = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1]
        if c == 0:
            continue
        if c % lead:
            raise ExactDivisionError("leading coefficient does not divide")
        q = c // lead
        quot[k] = q
        for j, y in enumerate(b):
            rem[k + j] -= q * y
    if any(rem):
        raise ExactDivisionError("nonzero remainder in exact division")
    return _trim(quot)


def _content(a: Sequence[int]) -> int:
    g = 0
    for x in a:
        g = _gcd_int(g, x)
    return g


def _gcd_int(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _primitive(a: Sequence[int]) -> tuple[int, ...]:
    c = _content(a)
    if c in (0, 1):
        return tuple(a)
    return tuple(x // c for x in a)


def _pseudo_rem(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Pseudo-remainder of a by b: lc(b)^(da-db+1) * a mod b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and any(r):
        r = _trim(r)
        if not r or len(r) - 1 < db:
            break
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= lr * y
        r = list(_trim(r))
    return _trim(list(r))


def _list_gcd(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """GCD in Z[x] via the primitive pseudo-remainder sequence."""
    if not a:
        g = list(b)
    elif not b:
        g = list(a)
    else:
        cont = _gcd_int(_content(a), _content(b))
        f, g2 = _primitive(a), _primitive(b)
        if len(f) < len(g2):
            f, g2 = g2, f
        while g2:
            r = _pseudo_rem(f, g2)
            f, g2 = g2, _primitive(r)
        g = [cont * x for x in f]
    if g and g[-1] < 0:
        g = [-x for x in g]
    return _trim(list(g))


# ---------------------------------------------------------------------------
# Poly: dense integer polynomial (the carrier of the z-world)
# ---------------------------------------------------------------------------

class Poly:
    """Dense integer polynomial, coefficients in ascending order."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self._c = _trim(list(coeffs))

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def const(c: int) -> "Poly":
        return Poly((c,))

    @staticmethod
    def monomial(c: int, k: int) -> "Poly":
        return Poly((0,) * k + (c,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def lead(self) -> int:
        return self._c[-1] if self._c else 0

    def __getitem__(self, k: int) -> int:
        return self._c[k] if 0 <= k < len(self._c) else 0

    def __add__(self, other: "Poly") -> "Poly":
        p = Poly.__new__(Poly)
        p._c = _list_add(self._c, other._c)
        return p

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        p = Poly.__new__(Poly)
        p._c = tuple(-x for x in self._c)
        return p

    def __mul__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, int):
            if other == 0:
                return Poly.zero()
            p = Poly.__new__(Poly)
            p._c = tuple(other * x for x in self._c)
            return p
        p = Poly.__new__(Poly)
        p._c = _list_mul(self._c, other._c)
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out, base, e = Poly.one(), self, n
        while e > 0:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(("Poly", self._c))

    def exact_div(self, other: "Poly") -> "Poly":
        p = Poly.__new__(Poly)
        p._c = _list_exact_div(self._c, other._c)
        return p

    def content(self) -> int:
        return _content(self._c)

    def gcd(self, other: "Poly") -> "Poly":
        p = Poly.__new__(Poly)
        p._c = _list_gcd(self._c, other._c)
        return p

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (k >= 0)."""
        if self.is_zero:
            return self
        return Poly((0,) * k + self._c)

    def render(self, var: str = "z") -> str:
        return _render_terms(
            [(k, c) for k, c in enumerate(self._c) if c], var)

    def __repr__(self) -> str:
        return f"Poly({self.render()})"


# ---------------------------------------------------------------------------
# Laurent: sparse integer Laurent polynomial in one variable
# ---------------------------------------------------------------------------

class Laurent:
    """Integer Laurent polynomial, a sparse map exponent -> coefficient.

    The empty map is zero; stored coefficients are never zero.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        d: dict[int, int] = {}
        for k, v in items:
            if v:
                d[k] = d.get(k, 0) + v
                if not d[k]:
                    del d[k]
        self._c = d

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def q(k: int = 1) -> "Laurent":
        return Laurent({k: 1})

    @staticmethod
    def term(c: int, k: int) -> "Laurent":
        return Laurent({k: c}) if c else Laurent()

    @staticmethod
    def const(c: int) -> "Laurent":
        return Laurent.term(c, 0)

    @staticmethod
    def z() -> "Laurent":
        """q + 1/q."""
        return Laurent({1: 1, -1: 1})

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._c))

    @property
    def min_exp(self) -> int:
        return min(self._c)

    @property
    def max_exp(self) -> int:
        return max(self._c)

    def coeff(self, k: int) -> int:
        return self._c.get(k, 0)

    def items(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._c.items()))

    def __add__(self, other: "Laurent") -> "Laurent":
        d = dict(self._c)
        for k, v in other._c.items():
            nv = d.get(k, 0) + v
            if nv:
                d[k] = nv
            elif k in d:
                del d[k]
        out = Laurent.__new__(Laurent)
        out._c = d
        return out

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __neg__(self) -> "Laurent":
        out = Laurent.__new__(Laurent)
        out._c = {k: -v for k, v in self._c.items()}
        return out

    def __mul__(self, other: Union["Laurent", int]) -> "Laurent":
        if isinstance(other, int):
            if not other:
                return Laurent.zero()
            out = Laurent.__new__(Laurent)
            out._c = {k: other * v for k, v in self._c.items()}
            return out
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        d: dict[int, int] = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = ka + kb
                nv = d.get(k, 0) + va * vb
                if nv:
                    d[k] = nv
                elif k in d:
                    del d[k]
        out = Laurent.__new__(Laurent)
        out._c = d
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        out, base, e = Laurent.one(), self, n
        while e > 0:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Laurent) and self._c == other._c

    def __hash__(self) -> int:
        return hash(("Laurent", tuple(sorted(self._c.items()))))

    def bar(self) -> "Laurent":
        """Substitute q -> 1/q."""
        out = Laurent.__new__(Laurent)
        out._c = {-k: v for k, v in self._c.items()}
        return out

    def shifted(self, k: int) -> "Laurent":
        """Multiply by q^k."""
        out = Laurent.__new__(Laurent)
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    def derivative(self) -> "Laurent":
        """Formal derivative: d/dq q^k = k q^(k-1), including negative k."""
        out = Laurent.__new__(Laurent)
        out._c = {k - 1: k * v for k, v in self._c.items() if k}
        return out

    @property
    def is_palindromic(self) -> bool:
        return all(self._c.get(-k, 0) == v for k, v in self._c.items())

    def truncate_above(self, k: int) -> "Laurent":
        out = Laurent.__new__(Laurent)
        out._c = {e: v for e, v in self._c.items() if e <= k}
        return out

    def to_poly(self) -> tuple[int, Poly]:
        """Write self = q^shift * p with p(0) != 0; zero gives (0, 0)."""
        if self.is_zero:
            return 0, Poly.zero()
        shift = self.min_exp
        coeffs = [0] * (self.max_exp - shift + 1)
        for k, v in self._c.items():
            coeffs[k - shift] = v
        return shift, Poly(coeffs)

    @staticmethod
    def from_poly(p: Poly, shift: int = 0) -> "Laurent":
        out = Laurent.__new__(Laurent)
        out._c = {k + shift: c for k, c in enumerate(p.coeffs) if c}
        return out

    def exact_div(self, other: "Laurent") -> "Laurent":
        """Exact division; the quotient is again a Laurent polynomial."""
        if other.is_zero:
            raise ExactDivisionError("division by zero")
        if self.is_zero:
            return Laurent.zero()
        sa, pa = self.to_poly()
        sb, pb = other.to_poly()
        return Laurent.from_poly(pa.exact_div(pb), sa - sb)

    def is_unit_multiple_of(self, other: "Laurent") -> tuple[int, int] | None:
        """If self = sign * q^k * other, return (sign, k); else None."""
        if self.is_zero or other.is_zero:
            return (1, 0) if self.is_zero and other.is_zero else None
        sa, pa = self.to_poly()
        sb, pb = other.to_poly()
        for sign in (1, -1):
            if pa == pb * sign:
                return sign, sa - sb
        return None

    def eval_fraction(self, x: Fraction) -> Fraction:
        if x == 0 and not self.is_zero and self.min_exp < 0:
            raise ZeroDenominator("evaluating a negative power at 0")
        return sum((Fraction(v) * x ** k for k, v in self._c.items()),
                   Fraction(0))

    def render(self, var: str = "q") -> str:
        return _render_terms(self.items(), var)

    def __repr__(self) -> str:
        return f"Laurent({self.render()})"


def _render_terms(items: Sequence[tuple[int, int]], var: str) -> str:
    """Canonical text: terms ascending by exponent, `q^-2` style powers."""
    if not items:
        return "0"
    parts: list[str] = []
    for k, c in items:
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# conversions between the q-world and the z-world
# ---------------------------------------------------------------------------

def z_substitute(p: Poly) -> Laurent:
    """Evaluate a z-polynomial at z = q + 1/q."""
    z = Laurent.z()
    acc = Laurent.zero()
    for c in reversed(p.coeffs):
        acc = acc * z + Laurent.const(c)
    return acc


def q_to_z(p: Laurent) -> Poly:
    """Inverse of z_substitute on palindromic Laurent polynomials."""
    if not p.is_palindromic:
        raise NotSymmetric(f"not invariant under q -> 1/q: {p.render()}")
    rem = p
    out: list[int] = []
    while not rem.is_zero:
        d = rem.max_exp
        c = rem.coeff(d)
        while len(out) <= d:
            out.append(0)
        out[d] = c
        rem = rem - z_substitute(Poly.monomial(c, d))
    return Poly(out)


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def det_poly(mat: Sequence[Sequence[Poly]]) -> Poly:
    """Fraction-free Bareiss determinant over Z[x]."""
    n = len(mat)
    if n == 0:
        return Poly.one()
    m = [list(row) for row in mat]
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = t.exact_div(prev)
        prev = pivot
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def _det_laplace(mat: Sequence[Sequence[Laurent]]) -> Laurent:
    n = len(mat)
    if n == 0:
        return Laurent.one()
    if n == 1:
        return mat[0][0]
    acc = Laurent.zero()
    for j in range(n):
        c = mat[0][j]
        if c.is_zero:
            continue
        minor = [[row[t] for t in range(n) if t != j] for row in mat[1:]]
        term = c * _det_laplace(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def det_exact(mat: Sequence[Sequence[Laurent]]) -> Laurent:
    """Exact determinant of a square Laurent matrix.

    Laplace expansion up to 6x6; larger matrices clear each row's negative
    powers of q, run fraction-free Bareiss over Z[q], and divide the q-power
    back out.
    """
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("matrix is not square")
    if n == 0:
        return Laurent.one()
    if n <= 6:
        return _det_laplace(mat)
    total_shift = 0
    rows: list[list[Poly]] = []
    for row in mat:
        lift = 0
        for e in row:
            if not e.is_zero:
                lift = min(lift, e.min_exp)
        total_shift += -lift
        prow = []
        for e in row:
            s, p = e.shifted(-lift).to_poly()
            prow.append(p.shift(s))
        rows.append(prow)
    return Laurent.from_poly(det_poly(rows), 0).shifted(-total_shift)


def adjugate_poly(mat: Sequence[Sequence[Poly]]) -> list[list[Poly]]:
    """Adjugate via cofactor determinants (intended for small matrices)."""
    n = len(mat)
    out = [[Poly.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[mat[r][c] for c in range(n) if c != j]
                     for r in range(n) if r != i]
            d = det_poly(minor)
            out[j][i] = d if (i + j) % 2 == 0 else -d
    return out


# ---------------------------------------------------------------------------
# two-variable Laurent polynomials
# ---------------------------------------------------------------------------

class BiLaurent:
    """Integer Laurent polynomial in two variables x and y."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] |
                 Iterable[tuple[tuple[int, int], int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        d: dict[tuple[int, int], int] = {}
        for k, v in items:
            if v:
                kk = (k[0], k[1])
                d[kk] = d.get(kk, 0) + v
                if not d[kk]:
                    del d[kk]
        self._c = d

    @staticmethod
    def zero() -> "BiLaurent":
        return BiLaurent()

    @staticmethod
    def one() -> "BiLaurent":
        return BiLaurent({(0, 0): 1})

    @staticmethod
    def outer(f: Laurent, g: Laurent) -> "BiLaurent":
        """f(x) * g(y)."""
        out = BiLaurent.__new__(BiLaurent)
        out._c = {(i, j): a * b
                  for i, a in f.items() for j, b in g.items()}
        return out

    @staticmethod
    def x_minus_y() -> "BiLaurent":
        return BiLaurent({(1, 0): 1, (0, 1): -1})

    @property
    def is_zero(self) -> bool:
        return not self._c

    def items(self) -> tuple[tuple[tuple[int, int], int], ...]:
        return tuple(sorted(self._c.items()))

    def __add__(self, other: "BiLaurent") -> "BiLaurent":
        d = dict(self._c)
        for k, v in other._c.items():
            nv = d.get(k, 0) + v
            if nv:
                d[k] = nv
            elif k in d:
                del d[k]
        out = BiLaurent.__new__(BiLaurent)
        out._c = d
        return out

    def __sub__(self, other: "BiLaurent") -> "BiLaurent":
        return self + (-other)

    def __neg__(self) -> "BiLaurent":
        out = BiLaurent.__new__(BiLaurent)
        out._c = {k: -v for k, v in self._c.items()}
        return out

    def __mul__(self, other: Union["BiLaurent", int]) -> "BiLaurent":
        if isinstance(other, int):
            if not other:
                return BiLaurent.zero()
            out = BiLaurent.__new__(BiLaurent)
            out._c = {k: other * v for k, v in self._c.items()}
            return out
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        d: dict[tuple[int, int], int] = {}
        for (ax, ay), va in a.items():
            for (bx, by), vb in b.items():
                k = (ax + bx, ay + by)
                nv = d.get(k, 0) + va * vb
                if nv:
                    d[k] = nv
                elif k in d:
                    del d[k]
        out = BiLaurent.__new__(BiLaurent)
        out._c = d
        return out

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BiLaurent) and self._c == other._c

    def __hash__(self) -> int:
        return hash(("BiLaurent", tuple(sorted(self._c.items()))))

    def swap_xy(self) -> "BiLaurent":
        out = BiLaurent.__new__(BiLaurent)
        out._c = {(j, i): v for (i, j), v in self._c.items()}
        return out

    def subs_y_eq_x(self) -> Laurent:
        out = Laurent.zero()
        d: dict[int, int] = {}
        for (i, j), v in self._c.items():
            k = i + j
            d[k] = d.get(k, 0) + v
        out._c = {k: v for k, v in d.items() if v}
        return out

    def div_x_minus_y(self) -> "BiLaurent":
        """Exact division by (x - y); the input must vanish on x = y."""
        if self.is_zero:
            return self
        ax = min(i for (i, _), _ in self._c.items())
        ay = min(j for (_, j), _ in self._c.items())
        # lift to a genuine polynomial in x and y
        by_x: dict[int, dict[int, int]] = {}
        dmax = 0
        for (i, j), v in self._c.items():
            ii, jj = i - ax, j - ay
            by_x.setdefault(ii, {})[jj] = v
            dmax = max(dmax, ii)
        # synthetic division by (x - y), treating coefficients in Z[y]
        quot: dict[int, dict[int, int]] = {}
        carry: dict[int, int] = {}
        for deg in range(dmax, 0, -1):
            c = dict(by_x.get(deg, {}))
            for j, v in carry.items():
                c[j] = c.get(j, 0) + v
            c = {j: v for j, v in c.items() if v}
            quot[deg - 1] = c
            carry = {j + 1: v for j, v in c.items()}
        rem = dict(by_x.get(0, {}))
        for j, v in carry.items():
            rem[j] = rem.get(j, 0) + v
        if any(rem.values()):
            raise ExactDivisionError("not divisible by (x - y)")
        out = BiLaurent.__new__(BiLaurent)
        out._c = {(i + ax, j + ay): v
                  for i, col in quot.items() for j, v in col.items() if v}
        return out

    def eval_fraction(self, x: Fraction, y: Fraction) -> Fraction:
        acc = Fraction(0)
        for (i, j), v in self._c.items():
            acc += Fraction(v) * x ** i * y ** j
        return acc

    def __repr__(self) -> str:
        return f"BiLaurent({dict(self.items())!r})"


def bezoutian(f: Laurent, g: Laurent) -> BiLaurent:
    """(f(x) g(y) - f(y) g(x)) / (x - y), exactly."""
    num = BiLaurent.outer(f, g) - BiLaurent.outer(g, f)
    return num.div_x_minus_y()


def wronskian(f: Laurent, g: Laurent) -> Laurent:
    """f' g - f g' with the formal Laurent derivative."""
    return f.derivative() * g - f * g.derivative()


# ---------------------------------------------------------------------------
# truncated power series over the rationals
# ---------------------------------------------------------------------------

class TruncSeries:
    """Power series in one variable truncated at a fixed order.

    Coefficients are exact Fractions of u^0 .. u^order; all arithmetic is
    closed at that order.
    """

    __slots__ = ("order", "_c")

    DEFAULT_ORDER = 32

    def __init__(self, order: int, coeffs: Iterable[Fraction | int] = ()):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        c = [Fraction(x) for x in coeffs][: order + 1]
        c += [Fraction(0)] * (order + 1 - len(c))
        self._c = c

    @staticmethod
    def zero(order: int) -> "TruncSeries":
        return TruncSeries(order)

    @staticmethod
    def one(order: int) -> "TruncSeries":
        return TruncSeries(order, (1,))

    @staticmethod
    def u(order: int) -> "TruncSeries":
        return TruncSeries(order, (0, 1))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(self._c)

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k <= self.order else Fraction(0)

    def _match(self, other: "TruncSeries") -> int:
        if self.order != other.order:
            raise ValueError("series truncated at different orders")
        return self.order

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = self._match(other)
        return TruncSeries(n, [a + b for a, b in zip(self._c, other._c)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        n = self._match(other)
        return TruncSeries(n, [a - b for a, b in zip(self._c, other._c)])

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.order, [-a for a in self._c])

    def __mul__(self, other: Union["TruncSeries", int, Fraction]) -> "TruncSeries":
        if isinstance(other, (int, Fraction)):
            return TruncSeries(self.order, [a * other for a in self._c])
        n = self._match(other)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self._c):
            if a:
                for j in range(0, n + 1 - i):
                    b = other._c[j]
                    if b:
                        out[i + j] += a * b
        return TruncSeries(n, out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, TruncSeries) and self.order == other.order
                and self._c == other._c)

    def __hash__(self) -> int:
        return hash(("TruncSeries", self.order, tuple(self._c)))

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self._c)

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if self._c[0] == 0:
            raise ZeroDenominator("series with zero constant term")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / self._c[0]
        for k in range(1, n + 1):
            s = Fraction(0)
            for i in range(1, k + 1):
                s += self._c[i] * inv[k - i]
            inv[k] = -s / self._c[0]
        return TruncSeries(n, inv)

    def compose_poly(self, coeffs: Sequence[int | Fraction]) -> "TruncSeries":
        """Evaluate the polynomial sum c_k t^k at t = self (Horner)."""
        acc = TruncSeries.zero(self.order)
        for c in reversed(list(coeffs)):
            acc = acc * self + TruncSeries(self.order, (c,))
        return acc

    def render(self, var: str = "u") -> str:
        parts = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            body = str(abs(c)) if k == 0 else (
                (var if k == 1 else f"{var}^{k}") if abs(c) == 1
                else f"{abs(c)}*{var if k == 1 else f'{var}^{k}'}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"TruncSeries({self.render()} + O(u^{self.order + 1}))"


def series_sqrt1p(order: int = TruncSeries.DEFAULT_ORDER) -> TruncSeries:
    """Binomial series of (1 + u)^(1/2) truncated at the given order."""
    c = [Fraction(1)]
    for k in range(1, order + 1):
        c.append(c[-1] * (Fraction(1, 2) - (k - 1)) / k)
    return TruncSeries(order, c)


# ---------------------------------------------------------------------------
# rational functions in reduced canonical form
# ---------------------------------------------------------------------------

class RatFunc:
    """Quotient of two polynomials, stored fully reduced.

    Both members live in the same ring: either dense Poly (the z-world) or
    Laurent (the q-world).  The denominator is kept as an honest polynomial
    with nonzero constant term (units q^k are pushed into the numerator) and
    a positive leading coefficient; the joint integer content is stripped.
    Equality is structural equality of the reduced form.
    """

    __slots__ = ("num", "den", "_laurent")

    def __init__(self, num, den):
        laurent = isinstance(num, Laurent) or isinstance(den, Laurent)
        if laurent:
            num = num if isinstance(num, Laurent) else Laurent.from_poly(num)
            den = den if isinstance(den, Laurent) else Laurent.from_poly(den)
            if den.is_zero:
                raise ZeroDenominator("zero denominator")
            ns, np = num.to_poly()
            ds, dp = den.to_poly()
            np, dp = _reduce_pair(np, dp)
            self.num = Laurent.from_poly(np, ns - ds)
            self.den = Laurent.from_poly(dp)
        else:
            if den.is_zero:
                raise ZeroDenominator("zero denominator")
            np, dp = _reduce_pair(num, den)
            self.num = np
            self.den = dp
        self._laurent = laurent

    @staticmethod
    def from_int(c: int, laurent: bool = False) -> "RatFunc":
        if laurent:
            return RatFunc(Laurent.const(c), Laurent.one())
        return RatFunc(Poly.const(c), Poly.one())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, int):
            return RatFunc.from_int(other, self._laurent)
        return RatFunc(other, Laurent.one() if self._laurent else Poly.one())

    def __add__(self, other) -> "RatFunc":
        o = self._coerce(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        o = self._coerce(other)
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other) -> "RatFunc":
        return self._coerce(other) - self

    def __neg__(self) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        out.num, out.den, out._laurent = -self.num, self.den, self._laurent
        return out

    def __mul__(self, other) -> "RatFunc":
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o.num.is_zero:
            raise ZeroDenominator("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return self._coerce(other) / self

    def reciprocal(self) -> "RatFunc":
        if self.num.is_zero:
            raise ZeroDenominator("reciprocal of zero")
        return RatFunc(self.den, self.num)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RatFunc", self.num, self.den))

    def render(self, var: str = "q") -> str:
        n = self.num.render(var)
        if self.den == (Laurent.one() if self._laurent else Poly.one()):
            return n
        return f"({n}) / ({self.den.render(var)})"

    def __repr__(self) -> str:
        return f"RatFunc({self.render()})"


def _reduce_pair(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero:
        return Poly.zero(), Poly.one()
    g = num.gcd(den)
    if g.degree > 0 or abs(g.lead) > 1:
        num = num.exact_div(g)
        den = den.exact_div(g)
    c = _gcd_int(num.content(), den.content())
    if c > 1:
        num = Poly(tuple(x // c for x in num.coeffs))
        den = Poly(tuple(x // c for x in den.coeffs))
    if den.lead < 0:
        num, den = -num, -den
    return num, den


# ---------------------------------------------------------------------------
# small matrix helpers over Laurent
# ---------------------------------------------------------------------------

def mat_identity(n: int) -> list[list[Laurent]]:
    return [[Laurent.one() if i == j else Laurent.zero() for j in range(n)]
            for i in range(n)]


def mat_mul(a: Sequence[Sequence[Laurent]],
            b: Sequence[Sequence[Laurent]]) -> list[list[Laurent]]:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[Laurent.zero()] * p for _ in range(n)]
    for i in range(n):
        for k in range(m):
            x = a[i][k]
            if x.is_zero:
                continue
            for j in range(p):
                y = b[k][j]
                if not y.is_zero:
                    out[i][j] = out[i][j] + x * y
    return out


def mat_eq(a: Sequence[Sequence[Laurent]],
           b: Sequence[Sequence[Laurent]]) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b))
