"""The lambda-bracket engine for the rank-one energy-momentum algebra.

A lambda polynomial stores, for each power of the formal variable, the
plain polynomial coefficient; the n-th product is then n! times the
stored coefficient, so every intermediate value stays inside integer
arithmetic.

Two independent evaluators are provided.  bracket_master expands the
closed-form sum over generator partials of the shifted generator
bracket.  bracket_recursive reduces arguments step by step through
sesquilinearity, skew-symmetry and the product rule, bottoming out at
the generator bracket.  They must agree everywhere; the verification
suites compare them case by case.
"""

from __future__ import annotations

from math import comb, factorial

from .diffpoly import AlgebraCtx, DiffPoly, conformal_weight, mono


def _acc(d: dict, k, p: DiffPoly) -> None:
    if not p:
        return
    cur = d.get(k)
    s = p if cur is None else cur + p
    if s:
        d[k] = s
    elif k in d:
        del d[k]


class LambdaPoly:
    """Finite map from lambda exponent to DiffPoly coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: p for k, p in (coeffs or {}).items() if p}

    @classmethod
    def zero(cls) -> "LambdaPoly":
        return cls()

    @classmethod
    def of(cls, f: DiffPoly) -> "LambdaPoly":
        """Embed a plain polynomial as the constant-in-lambda value."""
        return cls({0: f})

    def coeff(self, k: int) -> DiffPoly:
        return self.coeffs.get(k, DiffPoly.zero())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LambdaPoly) and self.coeffs == other.coeffs

    def __add__(self, other: "LambdaPoly") -> "LambdaPoly":
        out = dict(self.coeffs)
        for k, p in other.coeffs.items():
            _acc(out, k, p)
        return LambdaPoly(out)

    def __sub__(self, other: "LambdaPoly") -> "LambdaPoly":
        return self + (-other)

    def __neg__(self) -> "LambdaPoly":
        return LambdaPoly({k: -p for k, p in self.coeffs.items()})

    def scale(self, f) -> "LambdaPoly":
        """Multiply every coefficient by f (an int or a DiffPoly)."""
        return LambdaPoly({k: p * f for k, p in self.coeffs.items()})

    def lambda_shift(self, m: int, sign: int = 1) -> "LambdaPoly":
        """Multiply by (sign*lambda)^m; no derivative acts."""
        s = -1 if (sign < 0 and m % 2) else 1
        return LambdaPoly({k + m: p * s for k, p in self.coeffs.items()})

    def shift_apply(self, m: int, sign: int = 1) -> "LambdaPoly":
        """Apply the operator (sign*(lambda + d))^m, the total derivative
        acting on the stored coefficients."""
        cur = self
        for _ in range(m):
            nxt: dict = {}
            for k, p in cur.coeffs.items():
                _acc(nxt, k + 1, p)
                _acc(nxt, k, p.derive())
            cur = LambdaPoly(nxt)
        if sign < 0 and m % 2:
            cur = -cur
        return cur

    def subst_neg_shift(self) -> "LambdaPoly":
        """Substitute lambda -> -lambda - d (the derivative acting on the
        coefficient it lands on)."""
        out: dict = {}
        for k, p in self.coeffs.items():
            for kk, pp in LambdaPoly.of(p).shift_apply(k, -1).coeffs.items():
                _acc(out, kk, pp)
        return LambdaPoly(out)

    def __str__(self):
        from .text import format_lambdapoly

        return format_lambdapoly(self)

    __repr__ = __str__


class BiLambdaPoly:
    """Finite map from (lambda exponent, mu exponent) to DiffPoly."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: p for k, p in (coeffs or {}).items() if p}

    def coeff(self, i: int, j: int) -> DiffPoly:
        return self.coeffs.get((i, j), DiffPoly.zero())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, BiLambdaPoly) and self.coeffs == other.coeffs

    def __neg__(self):
        return BiLambdaPoly({k: -p for k, p in self.coeffs.items()})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, p in other.coeffs.items():
            _acc(out, k, p)
        return BiLambdaPoly(out)

    def __sub__(self, other):
        return self + (-other)


def shift_apply(P: LambdaPoly, m: int, sign: int = 1) -> LambdaPoly:
    return P.shift_apply(m, sign)


def gen_bracket(ctx: AlgebraCtx) -> LambdaPoly:
    """Bracket of the generator with itself: d1L + 2*lambda*L + c*lambda^3."""
    coeffs = {0: DiffPoly.gen(1), 1: 2 * DiffPoly.gen(0)}
    if ctx.central_charge:
        coeffs[3] = DiffPoly.const(ctx.central_charge)
    return LambdaPoly(coeffs)


def bracket_master(f: DiffPoly, g: DiffPoly, ctx: AlgebraCtx) -> LambdaPoly:
    """Closed-form bracket of two differential polynomials.

    For every pair of derivative orders (m, n) present: take the partial
    of f at order m, push it through (-lambda-d)^m, hit it with the
    right-acting shifted generator bracket, apply (lambda+d)^n, and
    multiply by the partial of g at order n.
    """
    gb = gen_bracket(ctx)
    total: dict = {}
    for m in sorted(f.orders_present()):
        fm = f.partial_wrt(m)
        if fm.is_zero():
            continue
        base = LambdaPoly.of(fm).shift_apply(m, -1)
        mid = LambdaPoly.zero()
        for p, v in gb.coeffs.items():
            mid = mid + base.shift_apply(p, 1).scale(v)
        for n in sorted(g.orders_present()):
            gn = g.partial_wrt(n)
            if gn.is_zero():
                continue
            term = mid.shift_apply(n, 1).scale(gn)
            for k, pp in term.coeffs.items():
                _acc(total, k, pp)
    return LambdaPoly(total)


def _mono_bracket(a: tuple, b: tuple, ctx: AlgebraCtx) -> LambdaPoly:
    # Unit on either side brackets to zero.
    if not a or not b:
        return LambdaPoly.zero()
    if len(b) > 1:
        # Product rule on the right argument.
        head, rest = (b[0],), b[1:]
        left = _mono_bracket(a, head, ctx).scale(DiffPoly.monomial(rest))
        right = _mono_bracket(a, rest, ctx).scale(DiffPoly.monomial(head))
        return left + right
    if len(a) == 1:
        # Sesquilinearity in both slots, down to the generator bracket.
        return gen_bracket(ctx).shift_apply(b[0], 1).lambda_shift(a[0], -1)
    # Composite left argument against a single generator: flip by
    # skew-symmetry, which puts the composite on the right.
    return -(_mono_bracket(b, a, ctx).subst_neg_shift())


def bracket_recursive(f: DiffPoly, g: DiffPoly, ctx: AlgebraCtx) -> LambdaPoly:
    """Same bracket as bracket_master, computed by axiom-by-axiom reduction.

    Serves as an independent oracle: it shares no code path with the
    closed-form evaluator beyond the generator bracket itself.
    """
    out: dict = {}
    for fm, fc in f.terms.items():
        for gm, gc in g.terms.items():
            t = _mono_bracket(fm, gm, ctx).scale(fc * gc)
            for k, p in t.coeffs.items():
                _acc(out, k, p)
    return LambdaPoly(out)


def nth_product(f: DiffPoly, g: DiffPoly, n: int, ctx: AlgebraCtx) -> DiffPoly:
    """n! times the lambda^n coefficient of the bracket."""
    return bracket_master(f, g, ctx).coeff(n) * factorial(n)


def skew_defect(f: DiffPoly, g: DiffPoly, ctx: AlgebraCtx) -> LambdaPoly:
    """{g_lam f} + {f_lam g} with lambda -> -lambda-d in the second term.
    Identically zero when skew-symmetry holds."""
    return bracket_master(g, f, ctx) + bracket_master(f, g, ctx).subst_neg_shift()


def jacobi_defect(a: DiffPoly, b: DiffPoly, c: DiffPoly, ctx: AlgebraCtx) -> BiLambdaPoly:
    """{a_lam {b_mu c}} - {{a_lam b}_(lam+mu) c} - {b_mu {a_lam c}}.

    The middle term brackets each lambda coefficient of {a_lam b} against
    c in a fresh variable, then substitutes that variable by lam+mu with
    binomial expansion.  Identically zero when the Jacobi identity holds.
    """
    out: dict = {}
    inner = bracket_master(b, c, ctx)
    for j, w in inner.coeffs.items():
        outer = bracket_master(a, w, ctx)
        for i, v in outer.coeffs.items():
            _acc(out, (i, j), v)
    inner = bracket_master(a, c, ctx)
    for i, v in inner.coeffs.items():
        outer = bracket_master(b, v, ctx)
        for j, w in outer.coeffs.items():
            _acc(out, (i, j), -w)
    ab = bracket_master(a, b, ctx)
    for k, v in ab.coeffs.items():
        q = bracket_master(v, c, ctx)
        for l, w in q.coeffs.items():
            for r in range(l + 1):
                _acc(out, (k + r, l - r), w * (-comb(l, r)))
    return BiLambdaPoly(out)


def hamiltonian(f: DiffPoly) -> DiffPoly:
    """The grading operator: scale every monomial by its conformal weight."""
    return DiffPoly({m: c * conformal_weight(m) for m, c in f.terms.items()})


def hamiltonian_defect(fm, gm, n: int, ctx: AlgebraCtx) -> DiffPoly:
    """H(f_(n)g) minus the weight the grading axiom demands.

    fm and gm are monomials (order tuples); both are eigenvectors of the
    grading operator, so the defect must vanish identically.
    """
    fm, gm = mono(fm), mono(gm)
    prod = nth_product(DiffPoly.monomial(fm), DiffPoly.monomial(gm), n, ctx)
    expected = conformal_weight(fm) + conformal_weight(gm) - (n + 1)
    return hamiltonian(prod) - prod * expected


def binom_int(n: int, k: int) -> int:
    """Binomial coefficient with an arbitrary integer upper argument."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    return num // factorial(k)


def hbar_bracket(a: DiffPoly, b: DiffPoly, ctx: AlgebraCtx) -> dict[int, DiffPoly]:
    """The one-parameter bracket: sum over j of C(weight(a)-1, j) times the
    j-th product, keyed by the power of the formal parameter.

    a is split into its grading eigencomponents first; each contributes
    with its own weight.
    """
    by_weight: dict[int, dict] = {}
    for m, c in a.terms.items():
        by_weight.setdefault(conformal_weight(m), {})[m] = c
    out: dict = {}
    for delta, terms in sorted(by_weight.items()):
        br = bracket_master(DiffPoly(terms), b, ctx)
        for j, p in br.coeffs.items():
            coef = binom_int(delta - 1, j) * factorial(j)
            if coef:
                _acc(out, j, p * coef)
    return out
