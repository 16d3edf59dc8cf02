"""Exact polynomial division and gcd over the integers, plus shared-root counts.

Division and gcd never touch floating point.  Gcd over the rationals is the
primitive-part gcd over Z.  The multivariate gcd reduces to univariate by
recursive content/primitive-part extraction with a primitive remainder
sequence in the main variable; the univariate base case is the subresultant
polynomial remainder sequence.
"""

from __future__ import annotations

from math import gcd

from .laurent import LaurentPoly, nu_poly


class ExactDivisionError(ArithmeticError):
    pass


def poly_divexact(f, g):
    """Exact division of polynomials with nonnegative exponents.

    Raises ExactDivisionError when g does not divide f.
    """
    if g.is_zero:
        raise ExactDivisionError("division by zero polynomial")
    if f.is_zero:
        return f
    vars = f.vars
    quotient = {}
    g_lead_exp, g_lead_coef = g.lead()
    rem = f
    while rem:
        r_exp, r_coef = rem.lead()
        exp = tuple(a - b for a, b in zip(r_exp, g_lead_exp))
        if any(e < 0 for e in exp) or r_coef % g_lead_coef:
            raise ExactDivisionError("not exactly divisible")
        c = r_coef // g_lead_coef
        quotient[exp] = quotient.get(exp, 0) + c
        rem = rem - g.shift(exp, c)
    return LaurentPoly(vars, quotient)


def laurent_divexact(f, g):
    """Exact division in the Laurent ring (monomials are units)."""
    if g.is_zero:
        raise ExactDivisionError("division by zero polynomial")
    if f.is_zero:
        return f
    mf = f.min_exponents()
    mg = g.min_exponents()
    q = poly_divexact(f.shift(tuple(-m for m in mf)), g.shift(tuple(-m for m in mg)))
    return q.shift(tuple(a - b for a, b in zip(mf, mg)))


def laurent_divides(g, f):
    """Whether g divides f with a Laurent-polynomial quotient."""
    try:
        laurent_divexact(f, g)
        return True
    except ExactDivisionError:
        return False


# ---- helpers viewing a polynomial as univariate in one position --------


def _deg_in(p, i):
    if p.is_zero:
        return -1
    return max(e[i] for e in p.terms)


def _coeff_of(p, i, d):
    """Coefficient of x_i^d, as a polynomial with exponent 0 in slot i."""
    out = {}
    for exp, coef in p.terms.items():
        if exp[i] == d:
            key = exp[:i] + (0,) + exp[i + 1 :]
            out[key] = coef
    return LaurentPoly(p.vars, out)


def _times_power(p, i, d):
    return p.shift(tuple(d if j == i else 0 for j in range(len(p.vars))))


def _pseudo_rem(f, g, i):
    """Pseudo-remainder of f by g in variable i: lc(g)^(deg f - deg g + 1) f mod g."""
    dg = _deg_in(g, i)
    lc_g = _coeff_of(g, i, dg)
    rem = f
    steps = _deg_in(f, i) - dg + 1
    while not rem.is_zero and _deg_in(rem, i) >= dg:
        dr = _deg_in(rem, i)
        lc_r = _coeff_of(rem, i, dr)
        rem = lc_g * rem - _times_power(lc_r, i, dr - dg) * g
        steps -= 1
    if steps > 0:
        # pad so the full lc(g)^(d+1) factor is present (keeps prem exact)
        rem = rem * lc_g**steps
    return rem


def _content_in(p, i):
    """Gcd of the univariate-in-x_i coefficients (a poly without x_i)."""
    cont = LaurentPoly.zero(p.vars)
    for d in range(_deg_in(p, i) + 1):
        c = _coeff_of(p, i, d)
        if not c.is_zero:
            cont = poly_gcd(cont, c)
    return cont


def _int_coeffs(p, i):
    out = {}
    for exp, coef in p.terms.items():
        out[exp[i]] = coef
    return out


def _uni_subresultant_gcd(f, g, i):
    """Subresultant PRS gcd for genuinely univariate integer polynomials."""
    a = _int_coeffs(f, i)
    b = _int_coeffs(g, i)

    def deg(p):
        return max(p) if p else -1

    def lc(p):
        return p[deg(p)]

    def cont(p):
        c = 0
        for v in p.values():
            c = gcd(c, v)
        return c

    def scale(p, c):
        return {d: v * c for d, v in p.items()}

    def divc(p, c):
        return {d: v // c for d, v in p.items()}

    def prem(p, q):
        dq = deg(q)
        lq = lc(q)
        r = dict(p)
        steps = deg(p) - dq + 1
        while r and deg(r) >= dq:
            dr = deg(r)
            lr = lc(r)
            new = {}
            for d, v in r.items():
                new[d] = v * lq
            for d, v in q.items():
                new[d + dr - dq] = new.get(d + dr - dq, 0) - v * lr
            r = {d: v for d, v in new.items() if v}
            steps -= 1
        if steps > 0 and r:
            r = scale(r, lq**steps)
        return r

    ca, cb = cont(a), cont(b)
    a, b = divc(a, ca), divc(b, cb)
    if deg(a) < deg(b):
        a, b = b, a
    g_, h = 1, 1
    while b:
        delta = deg(a) - deg(b)
        r = prem(a, b)
        a, b = b, (divc(r, g_ * h**delta) if r else {})
        if b:
            g_ = lc(a)
            h = g_**delta // h ** (delta - 1) if delta > 0 else h
    result = divc(a, cont(a)) if a else {}
    c = gcd(ca, cb)
    result = scale(result, c) if result else ({0: c} if c else {})
    exp0 = [0] * len(f.vars)
    terms = {}
    for d, v in result.items():
        e = list(exp0)
        e[i] = d
        terms[tuple(e)] = v
    return LaurentPoly(f.vars, terms)


def poly_gcd(f, g):
    """Gcd of two polynomials with nonnegative exponents, over Z.

    The result has a positive graded-lex leading coefficient.
    """
    if f.is_zero and g.is_zero:
        return f
    if f.is_zero:
        return g if g.lead()[1] > 0 else -g
    if g.is_zero:
        return f if f.lead()[1] > 0 else -f
    f._check_same_ring(g)
    used = [
        i
        for i in range(len(f.vars))
        if any(e[i] for e in f.terms) or any(e[i] for e in g.terms)
    ]
    if not used:
        c = gcd(next(iter(f.terms.values())), next(iter(g.terms.values())))
        return LaurentPoly.constant(f.vars, c)
    if len(used) == 1:
        return _uni_subresultant_gcd(f, g, used[0])

    i = used[-1]
    cf = _content_in(f, i)
    cg = _content_in(g, i)
    a = poly_divexact(f, cf)
    b = poly_divexact(g, cg)
    if _deg_in(a, i) < _deg_in(b, i):
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem(a, b, i)
        if r.is_zero:
            a, b = b, r
        else:
            a, b = b, poly_divexact(r, _content_in(r, i))
    a = poly_divexact(a, _content_in(a, i))
    result = poly_gcd(cf, cg) * a
    if result.lead()[1] < 0:
        result = -result
    return result


def laurent_gcd(ps):
    """Gcd of Laurent polynomials, up to unit, in normal form.

    Zero entries are ignored; the list must not be empty or all zero.

    >>> from .laurent import parse_poly
    >>> x2 = parse_poly("x^2 - 1", ("x",))
    >>> sq = parse_poly("x^2 - 2*x + 1", ("x",))
    >>> print(laurent_gcd([x2, sq]))
    x - 1
    """
    ps = list(ps)
    if not ps:
        raise ValueError("gcd of an empty list")
    nonzero = [p.normal_form() for p in ps if not p.is_zero]
    if not nonzero:
        raise ValueError("gcd of all-zero inputs")
    acc = nonzero[0]
    for p in nonzero[1:]:
        acc = poly_gcd(acc, p)
        if acc.is_unit():
            break
    return acc.normal_form()


class RootCount(int):
    """An integer count that remembers the degenerate all-roots case.

    ``all_roots`` is True exactly when the polynomial was identically zero,
    in which case the count is a guaranteed lower bound (every root of the
    comparison polynomial is shared).
    """

    def __new__(cls, value, all_roots=False):
        self = super().__new__(cls, value)
        self.all_roots = all_roots
        return self

    def __repr__(self):
        return f"RootCount({int(self)}, all_roots={self.all_roots})"


def _as_univariate(p, var):
    used = p.variables_used()
    if len(used) > 1:
        raise ValueError("polynomial is not univariate")
    name = used[0] if used else var
    i = p.vars.index(name) if name in p.vars else None
    terms = {}
    for exp, coef in p.terms.items():
        d = exp[i] if i is not None else 0
        terms[(d,)] = terms.get((d,), 0) + coef
    return LaurentPoly((name,), terms)


def shared_root_count(p, n, var="t"):
    """Number of distinct complex roots shared by p and nu_n = t^(n-1)+...+1.

    Computed as the degree of gcd(normal_form(p), nu_n) over the rationals;
    nu_n is squarefree, so this is exactly the distinct shared-root count.
    The zero polynomial returns the flagged value n - 1 (all roots shared).

    >>> shared_root_count(nu_poly(3), 3)
    RootCount(2, all_roots=False)
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if p.is_zero:
        return RootCount(n - 1, all_roots=True)
    q = _as_univariate(p, var).normal_form()
    nu = nu_poly(n, q.vars[0])
    g = poly_gcd(q, nu)
    return RootCount(_deg_in(g, 0))
