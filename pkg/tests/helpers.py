"""Shared hypothesis strategies and independent model oracles.

The oracles here deliberately avoid the package's own algorithms: plain
one-variable integer polynomials stand in for differential polynomials
under a substitution, tableaux are counted by explicit backtracking and by
the closed hook-product formula, and diagram surgery is re-derived from
raw cell sets.
"""

from math import factorial

from hypothesis import strategies as st

from virmagri import DiffPoly, Partition, partitions_of

# ------------------------------------------------------------ strategies


def partition_st(max_n: int = 8):
    return st.integers(0, max_n).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def mono_st(max_deg: int = 6):
    return partition_st(max_deg).map(lambda p: tuple(v - 1 for v in p.parts))


def diffpoly_st(max_deg: int = 6, max_terms: int = 3):
    term = st.tuples(mono_st(max_deg), st.integers(-9, 9))

    def build(ts):
        out = DiffPoly.zero()
        for m, c in ts:
            out = out + DiffPoly.monomial(m, c)
        return out

    return st.lists(term, min_size=1, max_size=max_terms).map(build)


# ------------------------------------- plain integer polynomials in one t

def p1_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def p1_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, c in a.items():
        for j, d in b.items():
            out[i + j] = out.get(i + j, 0) + c * d
    return {k: c for k, c in out.items() if c}


def p1_scale(a: dict, s: int) -> dict:
    return {k: c * s for k, c in a.items() if c * s}


def p1_derive(a: dict) -> dict:
    return {k - 1: c * k for k, c in a.items() if k > 0 and c * k}


def realize(f: DiffPoly, l_poly: dict) -> dict:
    """Substitute the k-th derivative of l_poly for every order-k factor.

    Collapses a differential polynomial to a plain polynomial in t; the
    total derivative then has to match d/dt on the image.
    """
    derivs = {0: l_poly}

    def deriv(k):
        while k not in derivs:
            top = max(derivs)
            derivs[top + 1] = p1_derive(derivs[top])
        return derivs[k]

    out: dict = {}
    for m, c in f.terms.items():
        prod = {0: 1}
        for k in m:
            prod = p1_mul(prod, deriv(k))
        out = p1_add(out, p1_scale(prod, c))
    return out


def eval_at(f: DiffPoly, values: dict) -> int:
    """Evaluate with every order-k generator set to values.get(k, 0)."""
    total = 0
    for m, c in f.terms.items():
        prod = c
        for k in m:
            prod *= values.get(k, 0)
        total += prod
    return total


def realize_line(f: DiffPoly, values: dict, direction: int) -> dict:
    """Restrict to the line u = values + t * e_direction, as a polynomial
    in t.  Its linear coefficient is the formal partial at the point."""
    out: dict = {}
    for m, c in f.terms.items():
        prod = {0: c}
        for k in m:
            factor = {0: values.get(k, 0)}
            if k == direction:
                factor[1] = 1
            prod = p1_mul(prod, factor)
        out = p1_add(out, prod)
    return out


# -------------------------------------------------------- tableau models

def syt_by_fillings(parts) -> int:
    """Count standard fillings by direct backtracking over placements."""
    parts = tuple(Partition(parts).parts)
    n = sum(parts)
    filled = [0] * len(parts)

    def go(k: int) -> int:
        if k == n:
            return 1
        total = 0
        for i in range(len(parts)):
            if filled[i] < parts[i] and (i == 0 or filled[i - 1] > filled[i]):
                filled[i] += 1
                total += go(k + 1)
                filled[i] -= 1
        return total

    return go(0)


def syt_by_hooks(parts) -> int:
    """The closed hook-product formula."""
    parts = tuple(Partition(parts).parts)
    n = sum(parts)
    if not parts:
        return 1
    cols = [0] * parts[0]
    for p in parts:
        for i in range(p):
            cols[i] += 1
    den = 1
    for r, rowlen in enumerate(parts):
        for c in range(rowlen):
            den *= (rowlen - c) + (cols[c] - r) - 1
    num = factorial(n)
    assert num % den == 0
    return num // den


# ------------------------------------------------------ diagram surgery

def cells(p: Partition) -> set:
    return {(r, c) for r, row in enumerate(p.parts) for c in range(row)}


def conjugate_by_cells(p: Partition) -> Partition:
    cs = cells(p)
    width = max((c for _, c in cs), default=-1) + 1
    return Partition(sum(1 for r, c in cs if c == col) for col in range(width))


def covers_by_cells(p: Partition) -> list[Partition]:
    """One-box-larger partitions, ordered by the row of the new box."""
    base = cells(p)
    out = []
    for q in partitions_of(p.size + 1):
        extra = cells(q) - base
        if len(extra) == 1 and base <= cells(q):
            (row, _col), = extra
            out.append((row, q))
    return [q for _, q in sorted(out, key=lambda t: t[0])]


def covered_by_cells(p: Partition) -> list[Partition]:
    """One-box-smaller partitions, ordered by the row of the removed box."""
    base = cells(p)
    out = []
    for q in partitions_of(p.size - 1):
        extra = base - cells(q)
        if len(extra) == 1 and cells(q) <= base:
            (row, _col), = extra
            out.append((row, q))
    return [q for _, q in sorted(out, key=lambda t: t[0])]
