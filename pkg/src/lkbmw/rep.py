"""The Lawrence-Krammer representation of the BMW algebra B(A_{n-1}).

Matrices act on column vectors indexed by the positive roots in position
order: column position(beta) of G_i holds the coordinates of the image of
x_beta under the i-th generator.  Two independent constructions are provided:
the closed-form case analysis on inner products, and the recursive block
scheme that extends the size-(n-1) matrices by n-1 rows and columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

from . import linalg
from .rings import Specialization
from .roots import all_roots, inner2, num_roots, shift, simple_root


def nu_action(n, i, beta, ctx=None):
    """Image of x_beta under nu_i, as a sparse map RootIndex -> coefficient.

    The six cases, split on 2(beta|alpha_i) and on the position of beta
    relative to alpha_i:
      (a) 0              -> r x_beta
      (b) 2              -> l^{-1} x_beta
      (c) 1, beta-a > a  -> x_{beta-a}
      (d) 1, beta-a < a  -> x_{beta-a} + m/(l r^{ht-2}) x_a - m x_beta
      (e) -1, beta > a   -> x_{beta+a} + m r^{ht-1} x_a - m x_beta
      (f) -1, beta < a   -> x_{beta+a}
    """
    if ctx is None:
        ctx = Specialization.generic().field()
    ip = inner2(beta, i)
    alpha = simple_root(i, beta.n)
    if ip == 0:
        return {beta: ctx.r_pow(1)}
    if ip == 2:
        return {beta: ctx.l_inv()}
    m = ctx.m()
    if ip == 1:
        down = shift(beta, i, "-")
        if alpha.precedes(down):
            return {down: ctx.one()}
        coeff = m * ctx.l_inv() * ctx.r_pow(-(beta.height - 2))
        return {down: ctx.one(), alpha: coeff, beta: -m}
    up = shift(beta, i, "+")
    if beta.precedes(alpha):
        return {up: ctx.one()}
    return {up: ctx.one(), alpha: m * ctx.r_pow(beta.height - 1), beta: -m}


def nu_e_action(n, i, beta, ctx=None):
    """Image of x_beta under nu(e_i): always a multiple of x_{alpha_i}."""
    if ctx is None:
        ctx = Specialization.generic().field()
    ip = inner2(beta, i)
    alpha = simple_root(i, beta.n)
    if ip == 0:
        return {}
    if ip == 2:
        return {alpha: ctx.x()}
    if ip == 1:
        down = shift(beta, i, "-")
        if alpha.precedes(down):
            return {alpha: ctx.l() * ctx.r_pow(beta.height - 2)}
        return {alpha: ctx.l_inv() * ctx.r_pow(-(beta.height - 2))}
    if alpha.precedes(beta):
        return {alpha: ctx.r_pow(beta.height - 1)}
    return {alpha: ctx.r_pow(-(beta.height - 1))}


def nu_inv_action(n, i, beta, ctx=None):
    """Image of x_beta under nu_i^{-1}."""
    if ctx is None:
        ctx = Specialization.generic().field()
    ip = inner2(beta, i)
    alpha = simple_root(i, beta.n)
    if ip == 0:
        return {beta: ctx.r_pow(-1)}
    if ip == 2:
        return {beta: ctx.l()}
    m = ctx.m()
    if ip == 1:
        down = shift(beta, i, "-")
        if alpha.precedes(down):
            coeff = -(m * ctx.l() * ctx.r_pow(beta.height - 2))
            return {down: ctx.one(), alpha: coeff, beta: m}
        return {down: ctx.one()}
    up = shift(beta, i, "+")
    if alpha.precedes(beta):
        return {up: ctx.one()}
    return {up: ctx.one(), alpha: -(m * ctx.r_pow(-(beta.height - 1))), beta: m}


@dataclass
class LKMatrices:
    """The family {G_i, E_i, G_i^{-1}} of size n(n-1)/2 over one field."""

    n: int
    spec: Specialization
    G: list
    E: list
    Ginv: list
    ctx: object = dc_field(default=None, repr=False)

    @property
    def size(self):
        return num_roots(self.n)


def _columns_to_matrix(n, columns, ctx):
    size = num_roots(n)
    zero = ctx.zero()
    M = [[zero] * size for _ in range(size)]
    for col_pos, entries in columns.items():
        for root, coeff in entries.items():
            M[root.position() - 1][col_pos - 1] = coeff
    return M


def require_nonzero_m(ctx):
    """The construction needs m = 1/r - r invertible, i.e. r^2 != 1."""
    if ctx.m().is_zero():
        raise ValueError(
            "the specialization forces r^2 = 1, which annihilates m")


def build_matrices(n, spec=None):
    """Assemble G_i, E_i and G_i^{-1} column-by-column from the case
    formulas, over the target field of the specialization."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if spec is None:
        spec = Specialization.generic()
    ctx = spec.field()
    require_nonzero_m(ctx)
    roots = all_roots(n)
    G, E, Ginv = [], [], []
    for i in range(1, n):
        gcols, ecols, icols = {}, {}, {}
        for beta in roots:
            pos = beta.position()
            gcols[pos] = nu_action(n, i, beta, ctx)
            ecols[pos] = nu_e_action(n, i, beta, ctx)
            icols[pos] = nu_inv_action(n, i, beta, ctx)
        G.append(_columns_to_matrix(n, gcols, ctx))
        E.append(_columns_to_matrix(n, ecols, ctx))
        Ginv.append(_columns_to_matrix(n, icols, ctx))
    return LKMatrices(n=n, spec=spec, G=G, E=E, Ginv=Ginv, ctx=ctx)


# -- recursive block construction -------------------------------------------

def _g_base3(k, ctx):
    """G_1(3) and G_2(3); the seed of the recursion."""
    zero, one = ctx.zero(), ctx.one()
    m = ctx.m()
    linv = ctx.l_inv()
    if k == 1:
        return [[linv, m, zero],
                [zero, -m, one],
                [zero, one, zero]]
    return [[zero, zero, one],
            [zero, linv, m * linv],
            [one, zero, -m]]


def _g_recursive(k, n, ctx):
    if n == 3:
        return _g_base3(k, ctx)
    size = num_roots(n)
    zero, one = ctx.zero(), ctx.one()
    m = ctx.m()
    prev = comb(n - 1, 2)
    M = [[zero] * size for _ in range(size)]
    if k <= n - 2:
        # matrix of the first kind: the (n-1)-strand matrix in the leading
        # block, r's along the trailing diagonal, one 2x2 swap block and a
        # single m r^{n-k-2} entry in the row of alpha_k
        inner = _g_recursive(k, n - 1, ctx)
        for a in range(prev):
            row = inner[a]
            Ma = M[a]
            for b in range(prev):
                Ma[b] = row[b]
        lo = prev + (n - k - 1)       # position of w_{k+1,n}
        hi = prev + (n - k)           # position of w_{k,n}
        r = ctx.r_pow(1)
        for p in range(prev + 1, size + 1):
            if p not in (lo, hi):
                M[p - 1][p - 1] = r
        M[comb(k, 2)][lo - 1] = m * ctx.r_pow(n - k - 2)
        M[lo - 1][lo - 1] = -m
        M[lo - 1][hi - 1] = one
        M[hi - 1][lo - 1] = one
        return M
    # matrix of the second kind: r-scalar block, shifts w_{s,n-1} -> w_{s,n},
    # the row (l^{-1}, m l^{-1}, m l^{-1}/r, ...) and a -m diagonal
    small = comb(n - 2, 2)
    r = ctx.r_pow(1)
    for p in range(1, small + 1):
        M[p - 1][p - 1] = r
    for p in range(small + 1, prev + 1):
        M[p + n - 2][p - 1] = one       # column w_{s,n-1} maps onto w_{s,n}
        M[p - 1][p + n - 2] = one       # and w_{s,n} falls back onto w_{s,n-1}
    top = prev + 1                       # position of w_{n-1,n}
    M[top - 1][top - 1] = ctx.l_inv()
    for p in range(prev + 2, size + 1):
        M[top - 1][p - 1] = m * ctx.l_inv() * ctx.r_pow(-(p - prev - 2))
        M[p - 1][p - 1] = -m
    return M


def build_matrices_recursive(n, spec=None):
    """The same family, built by the block recursion instead of the case
    formulas; E_i and G_i^{-1} come from the defining matrix relations."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if spec is None:
        spec = Specialization.generic()
    ctx = spec.field()
    require_nonzero_m(ctx)
    size = num_roots(n)
    ident = linalg.identity(size, ctx)
    m = ctx.m()
    l_over_m = ctx.l() / m
    G, E, Ginv = [], [], []
    for k in range(1, n):
        g = _g_recursive(k, n, ctx)
        g2 = linalg.mat_mul(g, g)
        e = linalg.mat_scale(
            linalg.mat_sub(linalg.mat_add(g2, linalg.mat_scale(g, m)), ident),
            l_over_m)
        ginv = linalg.mat_sub(
            linalg.mat_add(g, linalg.mat_scale(ident, m)),
            linalg.mat_scale(e, m))
        G.append(g)
        E.append(e)
        Ginv.append(ginv)
    return LKMatrices(n=n, spec=spec, G=G, E=E, Ginv=Ginv, ctx=ctx)


# -- relation verification ---------------------------------------------------

@dataclass
class RelationReport:
    n: int
    spec: Specialization
    checks: list  # (name, bool)

    @property
    def all_pass(self):
        return all(ok for _, ok in self.checks)

    @property
    def failures(self):
        return [name for name, ok in self.checks if not ok]


def verify_relations(mats):
    """Check the defining relations of B(A_{n-1}) on the matrices, with exact
    equality: braid relations, the polynomial definition of the e_i, the
    mixed relations, the inverse law, the idempotent relation e_i^2 = x e_i
    and the vanishing of e_i e_j for distant nodes."""
    n = mats.n
    ctx = mats.ctx if mats.ctx is not None else mats.spec.field()
    G, E, Ginv = mats.G, mats.E, mats.Ginv
    size = mats.size
    ident = linalg.identity(size, ctx)
    m = ctx.m()
    l = ctx.l()
    linv = ctx.l_inv()
    x = ctx.x()
    mul = linalg.mat_mul
    eq = linalg.mat_eq
    scale = linalg.mat_scale
    checks = []

    def add(name, ok):
        checks.append((name, ok))

    for a in range(n - 1):
        for b in range(a + 2, n - 1):
            add("(1) g%dg%d=g%dg%d" % (a + 1, b + 1, b + 1, a + 1),
                eq(mul(G[a], G[b]), mul(G[b], G[a])))
    for a in range(n - 2):
        lhs = mul(G[a], mul(G[a + 1], G[a]))
        rhs = mul(G[a + 1], mul(G[a], G[a + 1]))
        add("(2) braid g%d,g%d" % (a + 1, a + 2), eq(lhs, rhs))
    l_over_m = l / m
    for a in range(n - 1):
        g2 = mul(G[a], G[a])
        rhs = scale(linalg.mat_sub(
            linalg.mat_add(g2, scale(G[a], m)), ident), l_over_m)
        add("(3) e%d polynomial in g%d" % (a + 1, a + 1), eq(E[a], rhs))
    for a in range(n - 1):
        add("(4) g%de%d=l^-1 e%d" % (a + 1, a + 1, a + 1),
            eq(mul(G[a], E[a]), scale(E[a], linv)))
    for a in range(n - 2):
        add("(5) e%dg%de%d=l e%d" % (a + 1, a + 2, a + 1, a + 1),
            eq(mul(E[a], mul(G[a + 1], E[a])), scale(E[a], l)))
    for a in range(1, n - 1):
        add("(6) e%dg%de%d=l e%d" % (a + 1, a, a + 1, a + 1),
            eq(mul(E[a], mul(G[a - 1], E[a])), scale(E[a], l)))
    for a in range(n - 1):
        add("(7) e%dg%d=l^-1 e%d" % (a + 1, a + 1, a + 1),
            eq(mul(E[a], G[a]), scale(E[a], linv)))
    for a in range(n - 1):
        rhs = linalg.mat_add(
            linalg.mat_sub(ident, scale(G[a], m)), scale(E[a], m * linv))
        add("(8) g%d^2=1-mg+ml^-1 e" % (a + 1), eq(mul(G[a], G[a]), rhs))
    for a in range(n - 1):
        ok = eq(mul(G[a], Ginv[a]), ident) and eq(
            Ginv[a],
            linalg.mat_sub(linalg.mat_add(G[a], scale(ident, m)),
                           scale(E[a], m)))
        add("(9) inverse law g%d" % (a + 1), ok)
    for a in range(n - 2):
        add("(10) g%dg%de%d=e%de%d" % (a + 1, a + 2, a + 1, a + 2, a + 1),
            eq(mul(G[a], mul(G[a + 1], E[a])), mul(E[a + 1], E[a])))
    for a in range(1, n - 1):
        add("(11) g%dg%de%d=e%de%d" % (a + 1, a, a + 1, a, a + 1),
            eq(mul(G[a], mul(G[a - 1], E[a])), mul(E[a - 1], E[a])))
    for a in range(n - 2):
        lhs = mul(G[a], mul(E[a + 1], E[a]))
        rhs = linalg.mat_add(
            mul(G[a + 1], E[a]),
            scale(linalg.mat_sub(E[a], mul(E[a + 1], E[a])), m))
        add("(12) mixed g%de%de%d" % (a + 1, a + 2, a + 1), eq(lhs, rhs))
    for a in range(1, n - 1):
        lhs = mul(G[a], mul(E[a - 1], E[a]))
        rhs = linalg.mat_add(
            mul(G[a - 1], E[a]),
            scale(linalg.mat_sub(E[a], mul(E[a - 1], E[a])), m))
        add("(13) mixed g%de%de%d" % (a + 1, a, a + 1), eq(lhs, rhs))
    for a in range(n - 1):
        add("idempotent e%d^2=x e%d" % (a + 1, a + 1),
            eq(mul(E[a], E[a]), scale(E[a], x)))
    for a in range(n - 1):
        for b in range(a + 2, n - 1):
            z = mul(E[a], E[b])
            add("e%de%d=0" % (a + 1, b + 1),
                all(e.is_zero() for row in z for e in row))
    return RelationReport(n=n, spec=mats.spec, checks=checks)
