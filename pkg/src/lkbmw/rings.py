"""Exact arithmetic over Q, Q[l, r], the fraction field Q(l, r), and
cyclotomic quotient fields Q[r]/(Phi_m).

Polynomials in the two variables l and r are stored as sparse maps from
exponent pairs (deg_l, deg_r) to rational coefficients.  Field elements are
reduced fractions of such polynomials; the denominator is normalised to have
leading coefficient 1 in the lexicographic order on (deg_l, deg_r), so that
equality is plain structural equality.  Laurent expressions such as 1/r^k are
always represented as fractions, never as negative exponents.

Everything here is immutable after construction and safe to share freely.
"""

from __future__ import annotations

import math
from fractions import Fraction

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

_ZERO = _Q(0)
_ONE = _Q(1)


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division that must be exact is not."""


class PoleError(ArithmeticError):
    """Raised when a specialization sends a denominator to zero."""


class NonInvertibleError(ArithmeticError):
    """Raised when inversion fails in a quotient ring; carries the gcd found."""

    def __init__(self, msg, gcd=None):
        super().__init__(msg)
        self.gcd = gcd


# ---------------------------------------------------------------------------
# raw term-dict helpers (keys are (deg_l, deg_r) pairs, values nonzero mpq)
# ---------------------------------------------------------------------------

def _d_add(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        if w is None:
            out[k] = v
        else:
            w = w + v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def _d_neg(a):
    return {k: -v for k, v in a.items()}


def _d_sub(a, b):
    if not b:
        return dict(a)
    return _d_add(a, _d_neg(b))


def _d_mul(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for (da, ra), ca in a.items():
        for (db, rb), cb in b.items():
            k = (da + db, ra + rb)
            v = out.get(k)
            if v is None:
                out[k] = ca * cb
            else:
                v = v + ca * cb
                if v:
                    out[k] = v
                else:
                    del out[k]
    return out


def _d_scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _d_degl(a):
    return max(k[0] for k in a) if a else -1


# dense univariate helpers: a list v with v[i] the coefficient of r^i --------

def _u_trim(v):
    while v and not v[-1]:
        v.pop()
    return v


def _u_add(a, b):
    n = max(len(a), len(b))
    out = [_ZERO] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _u_trim(out)


def _u_sub(a, b):
    n = max(len(a), len(b))
    out = [_ZERO] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return _u_trim(out)


def _u_mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] = out[i + j] + ca * cb
    return _u_trim(out)


def _u_divmod(a, b):
    """Division with remainder over Q; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [_ZERO] * max(len(a) - db, 0)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db]
        if not c:
            continue
        c = c / lb
        q[k] = c
        for j in range(db + 1):
            if b[j]:
                a[k + j] = a[k + j] - c * b[j]
    return _u_trim(q), _u_trim(a[:db])


def _u_divexact(a, b):
    q, rem = _u_divmod(a, b)
    if rem:
        raise ExactDivisionError("inexact univariate division")
    return q


# integer dense univariate gcd (primitive PRS) ------------------------------

def _zu_content(v):
    g = 0
    for c in v:
        g = math.gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _zu_primitive(v):
    v = [int(c) for c in v]
    g = _zu_content(v)
    if g > 1:
        v = [c // g for c in v]
    if v and v[-1] < 0:
        v = [-c for c in v]
    return v


def _zu_prem(a, b):
    """Pseudo-remainder of integer polynomials (up to sign/content)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        la, da = a[-1], len(a) - 1
        a = [c * lb for c in a]
        for j in range(db + 1):
            a[da - db + j] -= la * b[j]
        while a and not a[-1]:
            a.pop()
    return a


def _zu_gcd_prs(a, b):
    while b:
        r = _zu_prem(a, b)
        a, b = b, _zu_primitive(r)
    return a


def _zu_eval(v, xi):
    acc = 0
    for c in reversed(v):
        acc = acc * xi + c
    return acc


def _zu_from_int(h, xi):
    """Balanced base-xi digits of a nonnegative integer."""
    digs = []
    while h:
        d = h % xi
        if 2 * d > xi:
            d -= xi
        digs.append(d)
        h = (h - d) // xi
    return digs


def _zu_divides(d, f):
    q, rem = _u_divmod([_Q(c) for c in f], [_Q(c) for c in d])
    return not rem


def _zu_gcd(a, b):
    """gcd in Z[r] of dense coefficient lists; primitive, positive leading.

    The heuristic evaluate/reconstruct method is tried first (the candidate
    is verified by exact trial division, so a miss is harmless); the
    primitive-PRS walk is the fallback.
    """
    a, b = _zu_primitive(list(a)), _zu_primitive(list(b))
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        return [1]
    xi = 2 * min(max(abs(c) for c in a), max(abs(c) for c in b)) + 29
    for _ in range(6):
        fa, fb = _zu_eval(a, xi), _zu_eval(b, xi)
        if fa and fb:
            cand = _zu_primitive(_zu_from_int(math.gcd(fa, fb), xi))
            if cand and _zu_divides(cand, a) and _zu_divides(cand, b):
                return cand
        xi = xi * 73794 // 27011 + 1
    return _zu_gcd_prs(a, b)


# conversions between the sparse dict and an (l-degree -> r-list) ladder ----

def _to_ll(d):
    """Sparse dict -> list over deg_l of dense r-coefficient lists."""
    dl = _d_degl(d)
    out = [[] for _ in range(dl + 1)]
    buckets = {}
    for (a, b), c in d.items():
        buckets.setdefault(a, []).append((b, c))
    for a, terms in buckets.items():
        top = max(b for b, _ in terms)
        row = [_ZERO] * (top + 1)
        for b, c in terms:
            row[b] = c
        out[a] = row
    return out


def _from_ll(ll):
    out = {}
    for a, row in enumerate(ll):
        for b, c in enumerate(row):
            if c:
                out[(a, b)] = c
    return out


def _d_divexact(a, b):
    """Exact division in Q[l, r]; raises ExactDivisionError otherwise."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    A, B = _to_ll(a), _to_ll(b)
    da, db = len(A) - 1, len(B) - 1
    if da < db:
        raise ExactDivisionError("inexact bivariate division")
    lead = B[db]
    Q = [[] for _ in range(da - db + 1)]
    R = [list(row) for row in A]
    for k in range(da - db, -1, -1):
        num = _u_trim(list(R[k + db]))
        if not num:
            continue
        qk = _u_divexact(num, lead)
        Q[k] = qk
        for j in range(db + 1):
            if B[j] and qk:
                prod = _u_mul(B[j], qk)
                row = R[k + j]
                if len(row) < len(prod):
                    row.extend([_ZERO] * (len(prod) - len(row)))
                for i, c in enumerate(prod):
                    row[i] = row[i] - c
    for row in R[:db]:
        if any(row):
            raise ExactDivisionError("inexact bivariate division")
    return _from_ll(Q)


# bivariate gcd: primitive-part subresultant scheme in the variable l -------

def _d_clear(a):
    """Scale an mpq-coefficient dict to integer coefficients."""
    if not a:
        return {}
    lcm = 1
    for c in a.values():
        d = c.denominator
        lcm = lcm * d // math.gcd(lcm, int(d))
    return {k: int(c * lcm) for k, c in a.items()}


def _ll_rcontent(ll):
    """gcd over Q[r] of the l-coefficients of an integer ladder."""
    g = []
    for row in ll:
        if row:
            g = _zu_gcd(g, row)
            if g == [1]:
                return [1]
    return g


def _ll_primitive(ll):
    c = _ll_rcontent(ll)
    if c == [1] or not c:
        return ll, c
    return [(_u_divexact(row, c) if row else []) for row in ll], c


def _ll_trim(ll):
    while ll and not ll[-1]:
        ll.pop()
    return ll


def _ll_prem(A, B):
    """Pseudo-remainder in l of integer ladders; deg_l(A) >= deg_l(B)."""
    A = [list(r) for r in A]
    db = len(B) - 1
    lb = B[db]
    while len(A) - 1 >= db and A:
        la = A[-1]
        da = len(A) - 1
        A = [(_u_mul(row, lb) if row else []) for row in A[:-1]]
        shift = da - db
        for j in range(db):
            p = _u_mul(B[j], la) if B[j] else []
            if p:
                A[shift + j] = _u_sub(A[shift + j], p)
        _ll_trim(A)
    return A


def _intify(row):
    return [int(c) for c in row]


def _d_gcd(a, b):
    """gcd in Q[l, r], returned primitive over Z with positive lex-leading
    coefficient.  Content over Q is extracted first; the l-part is handled by
    a primitive-part subresultant remainder sequence."""
    if not a:
        return _zd_normalize(_d_clear(b))
    if not b:
        return _zd_normalize(_d_clear(a))
    za, zb = _d_clear(a), _d_clear(b)
    la, lb = _d_degl(za), _d_degl(zb)
    if la == 0 and lb == 0:
        ra = _intify(_to_ll(za)[0])
        rb = _intify(_to_ll(zb)[0])
        g = _zu_gcd(ra, rb)
        return {(0, i): _Q(c) for i, c in enumerate(g) if c}
    if la == 0:
        ra = _intify(_to_ll(za)[0])
        cb = _ll_rcontent([_intify(r) for r in _to_ll(zb)])
        g = _zu_gcd(ra, cb)
        return {(0, i): _Q(c) for i, c in enumerate(g) if c}
    if lb == 0:
        return _d_gcd(b, a)
    A = [_intify(r) for r in _to_ll(za)]
    B = [_intify(r) for r in _to_ll(zb)]
    A, ca = _ll_primitive(A)
    B, cb = _ll_primitive(B)
    cont = _zu_gcd(ca, cb)
    if len(A) < len(B):
        A, B = B, A
    while True:
        if not B:
            prim = A
            break
        if len(B) == 1:
            prim = [[1]]
            break
        R = _ll_prem(A, B)
        R, _ = _ll_primitive(R)
        A, B = B, R
    cont_d = {(0, i): _Q(c) for i, c in enumerate(cont) if c}
    prim_d = {(a_, b_): _Q(c)
              for a_, row in enumerate(prim) for b_, c in enumerate(row) if c}
    return _zd_normalize(_d_mul(prim_d, cont_d))


def _zd_normalize(d):
    """Primitive integer form with positive leading (max-lex) coefficient."""
    if not d:
        return {}
    z = _d_clear(d)
    g = 0
    for c in z.values():
        g = math.gcd(g, abs(c))
        if g == 1:
            break
    if g > 1:
        z = {k: c // g for k, c in z.items()}
    if z[max(z)] < 0:
        z = {k: -c for k, c in z.items()}
    return {k: _Q(c) for k, c in z.items()}


# ---------------------------------------------------------------------------
# Poly2
# ---------------------------------------------------------------------------

class Poly2:
    """A polynomial in Q[l, r], stored sparsely without zero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    # -- constructors -------------------------------------------------------
    @staticmethod
    def zero():
        return Poly2()

    @staticmethod
    def one():
        return Poly2({(0, 0): _ONE})

    @staticmethod
    def const(c):
        return Poly2({(0, 0): _Q(c)})

    @staticmethod
    def var_l():
        return Poly2({(1, 0): _ONE})

    @staticmethod
    def var_r():
        return Poly2({(0, 1): _ONE})

    @staticmethod
    def monomial(deg_l, deg_r, c=1):
        return Poly2({(deg_l, deg_r): _Q(c)})

    # -- queries -------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0, 0): _ONE}

    def degree_l(self):
        return _d_degl(self.terms)

    def degree_r(self):
        return max(k[1] for k in self.terms) if self.terms else -1

    def leading_key(self):
        return max(self.terms) if self.terms else None

    def leading_coeff(self):
        return self.terms[max(self.terms)] if self.terms else _ZERO

    def __len__(self):
        return len(self.terms)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        return Poly2(_d_add(self.terms, other.terms))

    def __sub__(self, other):
        return Poly2(_d_sub(self.terms, other.terms))

    def __neg__(self):
        return Poly2(_d_neg(self.terms))

    def __mul__(self, other):
        return Poly2(_d_mul(self.terms, other.terms))

    def scale(self, c):
        return Poly2(_d_scale(self.terms, _Q(c)))

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly2.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divexact(self, other):
        return Poly2(_d_divexact(self.terms, other.terms))

    def gcd(self, other):
        return Poly2(_d_gcd(self.terms, other.terms))

    def __eq__(self, other):
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- printing ------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (dl, dr) in sorted(self.terms):
            c = self.terms[(dl, dr)]
            neg = c < 0
            c = -c if neg else c
            factors = []
            if c != 1 or (dl == 0 and dr == 0):
                factors.append(str(c))
            if dl == 1:
                factors.append("l")
            elif dl > 1:
                factors.append("l^%d" % dl)
            if dr == 1:
                factors.append("r")
            elif dr > 1:
                factors.append("r^%d" % dr)
            mono = "*".join(factors)
            if not parts:
                parts.append("-" + mono if neg else mono)
            else:
                parts.append(("- " if neg else "+ ") + mono)
        return " ".join(parts)

    def __repr__(self):
        return "Poly2(%s)" % self


_P_ONE = Poly2.one()


# ---------------------------------------------------------------------------
# FieldElement
# ---------------------------------------------------------------------------

class FieldElement:
    """A reduced fraction of two polynomials in Q[l, r].

    Invariants: gcd(num, den) = 1, den != 0, and den has leading coefficient
    1 in the lex order on (deg_l, deg_r); the zero element is 0/1.  With this
    normalisation, equality is structural and agrees with cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if den is None:
            den = _P_ONE
        if den.is_zero():
            raise ZeroDivisionError("field element with zero denominator")
        if reduce:
            num, den = _fe_reduce(num, den)
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------------
    @staticmethod
    def from_int(k):
        return FieldElement(Poly2.const(k), _P_ONE, reduce=False)

    @staticmethod
    def from_rational(p, q=1):
        c = _Q(p) / _Q(q)
        return FieldElement(Poly2.const(c), _P_ONE, reduce=False)

    @staticmethod
    def l():
        return FieldElement(Poly2.var_l(), _P_ONE, reduce=False)

    @staticmethod
    def r():
        return FieldElement(Poly2.var_r(), _P_ONE, reduce=False)

    @staticmethod
    def r_pow(k):
        if k >= 0:
            return FieldElement(Poly2.monomial(0, k), _P_ONE, reduce=False)
        return FieldElement(_P_ONE, Poly2.monomial(0, -k), reduce=False)

    @staticmethod
    def l_pow(k):
        if k >= 0:
            return FieldElement(Poly2.monomial(k, 0), _P_ONE, reduce=False)
        return FieldElement(_P_ONE, Poly2.monomial(-k, 0), reduce=False)

    # -- queries -------------------------------------------------------------
    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def has_l(self):
        return self.num.degree_l() > 0 or self.den.degree_l() > 0

    def complexity(self):
        return len(self.num) + len(self.den)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = FieldElement.from_int(other)
        if self.den == other.den:
            return FieldElement(self.num + other.num, self.den)
        return FieldElement(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = FieldElement.from_int(other)
        if self.den == other.den:
            return FieldElement(self.num - other.num, self.den)
        return FieldElement(self.num * other.den - other.num * self.den,
                            self.den * other.den)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        out = FieldElement.__new__(FieldElement)
        out.num = -self.num
        out.den = self.den
        return out

    def __mul__(self, other):
        if isinstance(other, int):
            other = FieldElement.from_int(other)
        return FieldElement(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = FieldElement.from_int(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero field element")
        return FieldElement(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero field element")
        return FieldElement(self.den, self.num)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = FE_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    # -- substitution --------------------------------------------------------
    def subs_l(self, value):
        """Substitute l -> value (a FieldElement); result stays exact."""
        num = _poly_subs_l(self.num, value)
        den = _poly_subs_l(self.den, value)
        if den.is_zero():
            raise PoleError(
                "denominator (%s) vanishes under the substitution l = %s"
                % (self.den, value))
        return num / den

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "FieldElement(%s)" % self


def _monomial_shift(p, a, b):
    return Poly2({(dl - a, dr - b): c for (dl, dr), c in p.terms.items()})


def _fe_reduce(num, den):
    if num.is_zero():
        return Poly2.zero(), _P_ONE
    if den.is_one():
        return num, den
    if len(den) == 1:
        # gcd with a monomial is a pure degree shift
        a, b = den.leading_key()
        va = min(a, min(dl for dl, _ in num.terms))
        vb = min(b, min(dr for _, dr in num.terms))
        if va or vb:
            num = _monomial_shift(num, va, vb)
            den = _monomial_shift(den, va, vb)
    elif len(num) == 1:
        a, b = num.leading_key()
        va = min(a, min(dl for dl, _ in den.terms))
        vb = min(b, min(dr for _, dr in den.terms))
        if va or vb:
            num = _monomial_shift(num, va, vb)
            den = _monomial_shift(den, va, vb)
        if not den.is_one():
            g = num.gcd(den)
            if not (len(g) == 1 and g.leading_key() == (0, 0)):
                num = num.divexact(g)
                den = den.divexact(g)
    elif not num.is_one():
        g = num.gcd(den)
        if not (len(g) == 1 and g.leading_key() == (0, 0)):
            num = num.divexact(g)
            den = den.divexact(g)
    lc = den.leading_coeff()
    if lc != 1:
        inv = _ONE / lc
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


def _poly_subs_l(p, value):
    """Evaluate a Poly2 at l = value (FieldElement); returns a FieldElement."""
    if p.is_zero():
        return FE_ZERO
    buckets = {}
    for (dl, dr), c in p.terms.items():
        buckets.setdefault(dl, {})[(0, dr)] = c
    out = FE_ZERO
    power = FE_ONE
    cur = 0
    for dl in sorted(buckets):
        while cur < dl:
            power = power * value
            cur += 1
        coeff = FieldElement(Poly2(buckets[dl]), _P_ONE, reduce=False)
        out = out + (coeff * power if dl else coeff)
    return out


FE_ZERO = FieldElement(Poly2.zero(), _P_ONE, reduce=False)
FE_ONE = FieldElement(_P_ONE, _P_ONE, reduce=False)


def fe_m():
    """m = 1/r - r, the quadratic parameter."""
    return FieldElement(Poly2({(0, 0): _ONE, (0, 2): -_ONE}),
                        Poly2.var_r(), reduce=False)


def fe_x_of(l_elem, m_elem):
    """x = 1 - (l - 1/l)/m, the idempotent eigenvalue, in terms of l and m."""
    return FE_ONE - (l_elem - l_elem.inverse()) / m_elem


# ---------------------------------------------------------------------------
# cyclotomic polynomials and quotient fields
# ---------------------------------------------------------------------------

_CYCLO_CACHE = {}


def cyclotomic(m):
    """The m-th cyclotomic polynomial Phi_m as a Poly2 in r, computed by
    exact division of r^m - 1 by the product of the Phi_d for proper d | m."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    if m in _CYCLO_CACHE:
        return _CYCLO_CACHE[m]
    num = Poly2({(0, m): _ONE, (0, 0): -_ONE})
    den = Poly2.one()
    for d in range(1, m):
        if m % d == 0:
            den = den * cyclotomic(d)
    phi = num.divexact(den)
    _CYCLO_CACHE[m] = phi
    return phi


def _poly_to_dense_r(p):
    if p.degree_l() > 0:
        raise ValueError("expected a polynomial in r only")
    out = [_ZERO] * (p.degree_r() + 1) if not p.is_zero() else []
    for (_, dr), c in p.terms.items():
        out[dr] = c
    return out


class QuotientField:
    """The field Q[r]/(modulus) for a monic irreducible modulus.

    Irreducibility is asserted by the caller, not proven here; with a
    reducible modulus inversion becomes partial and raises
    NonInvertibleError when it meets a zero divisor.
    """

    def __init__(self, modulus):
        dense = _u_trim(_poly_to_dense_r(modulus))
        if len(dense) < 2:
            raise ValueError("modulus must have degree >= 1")
        if dense[-1] != 1:
            raise ValueError("modulus must be monic")
        self.modulus = modulus
        self._dense = dense
        self.degree = len(dense) - 1

    def element(self, dense):
        _, rem = _u_divmod(dense, self._dense)
        return CycElement(self, tuple(rem))

    def zero(self):
        return CycElement(self, ())

    def one(self):
        return CycElement(self, (_ONE,))

    def from_int(self, k):
        q = _Q(k)
        return CycElement(self, (q,) if q else ())

    def embed(self, fe):
        """Map a FieldElement in r only into the quotient field."""
        num = self.element(_poly_to_dense_r(fe.num))
        den = self.element(_poly_to_dense_r(fe.den))
        return num / den

    def __eq__(self, other):
        return isinstance(other, QuotientField) and self._dense == other._dense

    def __hash__(self):
        return hash(tuple(self._dense))

    def __repr__(self):
        return "QuotientField(%s)" % self.modulus


class CycElement:
    """An element of Q[r]/(Phi), stored as a dense coefficient tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (_ONE,)

    def __bool__(self):
        return bool(self.coeffs)

    def complexity(self):
        return sum(1 for c in self.coeffs if c)

    def __add__(self, other):
        return CycElement(self.field, _u_add(list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other):
        return CycElement(self.field, _u_sub(list(self.coeffs), list(other.coeffs)))

    def __neg__(self):
        return CycElement(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        prod = _u_mul(list(self.coeffs), list(other.coeffs))
        _, rem = _u_divmod(prod, self.field._dense)
        return CycElement(self.field, rem)

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in the quotient field")
        # extended Euclid over Q[r]
        r0, r1 = list(self.field._dense), list(self.coeffs)
        t0, t1 = [], [_ONE]
        while r1:
            q, rem = _u_divmod(r0, r1)
            r0, r1 = r1, rem
            t0, t1 = t1, _u_sub(t0, _u_mul(q, t1))
        if len(r0) != 1:
            g = Poly2({(0, i): c for i, c in enumerate(r0) if c})
            raise NonInvertibleError(
                "element shares the factor (%s) with the modulus" % g, gcd=g)
        inv = [c / r0[0] for c in t0]
        _, rem = _u_divmod(inv, self.field._dense)
        return CycElement(self.field, rem)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, CycElement)
                and self.coeffs == other.coeffs and self.field == other.field)

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        p = Poly2({(0, i): c for i, c in enumerate(self.coeffs) if c})
        return str(p)

    def __repr__(self):
        return "CycElement(%s)" % self


# ---------------------------------------------------------------------------
# specializations and the coefficient-field contract
# ---------------------------------------------------------------------------

class Specialization:
    """A choice of target field: generic Q(l, r), or l -> f(r) in Q(r),
    optionally followed by reduction modulo a cyclotomic polynomial."""

    __slots__ = ("l_value", "modulus", "_field")

    def __init__(self, l_value=None, modulus=None):
        if modulus is not None and l_value is None:
            raise ValueError("a quotient specialization must also fix l")
        self.l_value = l_value
        self.modulus = modulus
        if modulus is None:
            self._field = None
        else:
            self._field = QuotientField(modulus)
            # the denominator of l_value must stay invertible in the quotient
            self._field.embed(l_value)

    @staticmethod
    def generic():
        return Specialization()

    @staticmethod
    def l_to(f):
        if isinstance(f, str):
            f = parse_r_expression(f)
        if f.has_l():
            raise ValueError("the value of l must be an expression in r only")
        if f.is_zero():
            raise ValueError("l must specialize to a nonzero value")
        return Specialization(l_value=f)

    @staticmethod
    def l_to_mod(f, modulus):
        if isinstance(f, str):
            f = parse_r_expression(f)
        if isinstance(modulus, int):
            modulus = cyclotomic(modulus)
        if f.has_l():
            raise ValueError("the value of l must be an expression in r only")
        return Specialization(l_value=f, modulus=modulus)

    @property
    def is_generic(self):
        return self.l_value is None

    @property
    def is_quotient(self):
        return self.modulus is not None

    def field(self):
        if self.is_quotient:
            return SpecializedQuotientContext(self)
        if self.is_generic:
            return GenericContext()
        return RationalFunctionContext(self.l_value)

    def __eq__(self, other):
        return (isinstance(other, Specialization)
                and self.l_value == other.l_value
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.l_value, self.modulus))

    def __str__(self):
        if self.is_generic:
            return "generic"
        if self.is_quotient:
            return "l=%s mod %s" % (self.l_value, self.modulus)
        return "l=%s" % self.l_value

    def __repr__(self):
        return "Specialization(%s)" % self


def specialize(a, s):
    """Apply a specialization entry-wise to a FieldElement over Q(l, r)."""
    if s.is_generic:
        return a
    b = a.subs_l(s.l_value)
    if not s.is_quotient:
        return b
    fld = s._field
    num = fld.element(_poly_to_dense_r(b.num))
    den = fld.element(_poly_to_dense_r(b.den))
    if den.is_zero():
        raise PoleError(
            "denominator (%s) vanishes modulo (%s)" % (b.den, s.modulus))
    return num / den


class GenericContext:
    """Element factory for the generic field Q(l, r)."""

    is_quotient = False

    def zero(self):
        return FE_ZERO

    def one(self):
        return FE_ONE

    def from_int(self, k):
        return FieldElement.from_int(k)

    def r_pow(self, k):
        return FieldElement.r_pow(k)

    def l(self):
        return FieldElement.l()

    def l_inv(self):
        return FieldElement.l_pow(-1)

    def m(self):
        return fe_m()

    def x(self):
        return fe_x_of(self.l(), self.m())

    def embed_r(self, fe):
        return fe

    def __eq__(self, other):
        return isinstance(other, GenericContext)

    def __hash__(self):
        return hash("generic-ctx")


class RationalFunctionContext(GenericContext):
    """Element factory for Q(r) with l fixed to a rational function of r."""

    def __init__(self, l_value):
        self._l = l_value

    def l(self):
        return self._l

    def l_inv(self):
        return self._l.inverse()

    def __eq__(self, other):
        return isinstance(other, RationalFunctionContext) and self._l == other._l

    def __hash__(self):
        return hash(("rfunc-ctx", self._l))


class SpecializedQuotientContext:
    """Element factory for Q[r]/(Phi) with l fixed."""

    is_quotient = True

    def __init__(self, spec):
        self._spec = spec
        self._fld = spec._field
        self._l = self._fld.embed(spec.l_value)
        r = self._fld.element([_ZERO, _ONE])
        self._r = r
        self._m = r.inverse() - r

    def zero(self):
        return self._fld.zero()

    def one(self):
        return self._fld.one()

    def from_int(self, k):
        return self._fld.from_int(k)

    def r_pow(self, k):
        return self._r ** k

    def l(self):
        return self._l

    def l_inv(self):
        return self._l.inverse()

    def m(self):
        return self._m

    def x(self):
        l = self._l
        return self.one() - (l - l.inverse()) / self._m

    def embed_r(self, fe):
        return self._fld.embed(fe)

    def __eq__(self, other):
        return (isinstance(other, SpecializedQuotientContext)
                and self._spec == other._spec)

    def __hash__(self):
        return hash(("quot-ctx", self._spec))


def is_semisimple_point(s, n):
    """Whether (r^2)^k != 1 for all 1 <= k <= n in the target field of s.

    Returns (True, None) or (False, k) with k the least violating power.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if not s.is_quotient:
        return True, None  # r is transcendental
    fld = s._field
    r2 = fld.element([_ZERO, _ZERO, _ONE])
    one = fld.one()
    p = fld.one()
    for k in range(1, n + 1):
        p = p * r2
        if p == one:
            return False, k
    return True, None


# ---------------------------------------------------------------------------
# parsing of l-expressions in r
# ---------------------------------------------------------------------------

class ExpressionError(ValueError):
    """Raised on malformed textual field expressions."""


def parse_r_expression(text):
    """Parse a rational expression in r (integers, + - * / ^, parentheses)
    into a FieldElement.  The keyword 'generic' is handled by the caller."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise ExpressionError("unexpected end of expression")
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_expr():
        node = parse_term()
        while peek() in ("+", "-"):
            op = take()
            rhs = parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term():
        node = parse_factor()
        while peek() in ("*", "/"):
            op = take()
            rhs = parse_factor()
            if op == "*":
                node = node * rhs
            else:
                if rhs.is_zero():
                    raise ExpressionError("division by zero in expression")
                node = node / rhs
        return node

    def parse_factor():
        tok = peek()
        if tok == "-":
            take()
            return -parse_factor()
        if tok == "+":
            take()
            return parse_factor()
        return parse_power()

    def parse_power():
        base = parse_atom()
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            tok = take()
            if tok is None or not tok.isdigit():
                raise ExpressionError("expected integer exponent")
            return base ** (sign * int(tok))
        return base

    def parse_atom():
        tok = take()
        if tok is None:
            raise ExpressionError("unexpected end of expression")
        if tok == "(":
            node = parse_expr()
            if take() != ")":
                raise ExpressionError("unbalanced parentheses")
            return node
        if tok == "r":
            return FieldElement.r()
        if tok.isdigit():
            return FieldElement.from_int(int(tok))
        raise ExpressionError("unexpected token %r" % tok)

    node = parse_expr()
    if pos != len(tokens):
        raise ExpressionError("trailing input after expression")
    return node


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/^()r":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ExpressionError("illegal character %r" % ch)
    return tokens
