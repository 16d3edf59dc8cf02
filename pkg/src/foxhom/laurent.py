"""Multivariable integer Laurent polynomials with exact arithmetic.

Terms live in a map from integer exponent vectors to nonzero coefficients.
Units of the ring are the signed monomials +-x^a; ``normal_form`` picks the
canonical associate (minimal exponents shifted to 0, positive leading
coefficient in graded-lex order), so two polynomials agree up to a unit
exactly when their normal forms are equal.

Text format: a sum of terms ``c*x^a*y^b`` (exponent 1 may be omitted), e.g.
``"2*x^2*y - x + 1"``.  JSON format::

    {"vars": [...], "terms": [{"exp": [ints], "coef": int}]}
"""

from __future__ import annotations

from math import gcd


def _grlex_key(exp):
    return (sum(exp), exp)


class LaurentPoly:
    """An exact Laurent polynomial over a fixed ordered variable list.

    >>> x, y = LaurentPoly.variables(("x", "y"))
    >>> print((x - 1) * (x + 1))
    x^2 - 1
    >>> print((x * y**-1 + 1).normal_form())
    x + y
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=()):
        object.__setattr__(self, "vars", tuple(vars))
        data = dict(terms) if not isinstance(terms, dict) else dict(terms)
        clean = {}
        for exp, coef in data.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(self.vars):
                raise ValueError("exponent vector length does not match variables")
            coef = int(coef)
            if coef:
                clean[exp] = coef
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def constant(cls, vars, c):
        return cls(vars, {(0,) * len(tuple(vars)): int(c)})

    @classmethod
    def monomial(cls, vars, exp, coef=1):
        return cls(vars, {tuple(exp): coef})

    @classmethod
    def variable(cls, vars, name):
        vars = tuple(vars)
        exp = [0] * len(vars)
        exp[vars.index(name)] = 1
        return cls(vars, {tuple(exp): 1})

    @classmethod
    def variables(cls, vars):
        """All generators of the ring at once, in order."""
        return tuple(cls.variable(vars, v) for v in vars)

    # ---- basic structure ----------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.vars, other)
        return (
            isinstance(other, LaurentPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def _check_same_ring(self, other):
        if self.vars != other.vars:
            raise ValueError(f"variable lists differ: {self.vars} vs {other.vars}")

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def lead(self):
        """(exponent, coefficient) of the graded-lex leading term, or None."""
        if not self.terms:
            return None
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def content(self):
        """Nonnegative gcd of the coefficients."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def min_exponents(self):
        if not self.terms:
            return (0,) * len(self.vars)
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.vars)))

    def max_exponents(self):
        if not self.terms:
            return (0,) * len(self.vars)
        return tuple(max(e[i] for e in self.terms) for i in range(len(self.vars)))

    def degree_in(self, name):
        """Span of exponents in one variable (max - min); -1 for the zero poly."""
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms) - min(e[i] for e in self.terms)

    def variables_used(self):
        return tuple(
            v
            for i, v in enumerate(self.vars)
            if any(e[i] for e in self.terms)
        )

    def is_monomial(self):
        return len(self.terms) == 1

    def is_unit(self):
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    # ---- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.vars, other)
        self._check_same_ring(other)
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            out[exp] = out.get(exp, 0) + coef
        return LaurentPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check_same_ring(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, 0) + c1 * c2
        return LaurentPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            exp, coef = next(iter(self.terms.items()))
            new_coef = coef if n % 2 else 1
            return LaurentPoly.monomial(self.vars, tuple(n * e for e in exp), new_coef)
        out = LaurentPoly.constant(self.vars, 1)
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, exp, coef=1):
        """Multiply by the monomial coef * x^exp."""
        exp = tuple(exp)
        return LaurentPoly(
            self.vars,
            {tuple(a + b for a, b in zip(e, exp)): c * coef for e, c in self.terms.items()},
        )

    # ---- normalization --------------------------------------------------

    def normal_form(self):
        """Canonical associate: minimal exponents 0, positive graded-lex lead."""
        if not self.terms:
            return self
        mins = self.min_exponents()
        shifted = self.shift(tuple(-m for m in mins))
        if shifted.lead()[1] < 0:
            shifted = -shifted
        return shifted

    def unit_equivalent(self, other):
        """Equality up to multiplication by a signed monomial."""
        self._check_same_ring(other)
        return self.normal_form() == other.normal_form()

    # ---- ring maps -------------------------------------------------------

    def rename(self, new_vars):
        """Reinterpret over a same-length variable list."""
        new_vars = tuple(new_vars)
        if len(new_vars) != len(self.vars):
            raise ValueError("variable count mismatch")
        return LaurentPoly(new_vars, self.terms)

    # ---- text and JSON ----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for i, (exp, coef) in enumerate(self.sorted_terms()):
            factors = []
            for v, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(v)
                elif e:
                    factors.append(f"{v}^{e}")
            mag = abs(coef)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if i == 0:
                chunks.append(body if coef > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"LaurentPoly({self.vars!r}, {str(self)!r})"

    def to_json(self):
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(e), "coef": c}
                for e, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            tuple(data["vars"]),
            {tuple(t["exp"]): t["coef"] for t in data["terms"]},
        )


def parse_poly(text, vars):
    """Parse the ``c*x^a*y^b`` sum syntax.

    >>> print(parse_poly("2*x^2*y - x + 1", ("x", "y")))
    2*x^2*y - x + 1
    """
    vars = tuple(vars)
    index = {v: i for i, v in enumerate(vars)}
    out = LaurentPoly.zero(vars)
    stripped = text.replace(" ", "")
    if not stripped or stripped == "0":
        return out
    # split at +/- signs, except signs that belong to an exponent (after ^)
    chunks = []
    current = []
    for i, ch in enumerate(stripped):
        if ch in "+-" and i > 0 and stripped[i - 1] != "^":
            chunks.append("".join(current))
            current = [] if ch == "+" else ["-"]
        else:
            current.append(ch)
    chunks.append("".join(current))
    for raw in chunks:
        if not raw:
            continue
        sign = 1
        if raw.startswith("-"):
            sign = -1
            raw = raw[1:]
        if not raw:
            raise ValueError(f"dangling sign in {text!r}")
        coef = sign
        exp = [0] * len(vars)
        for factor in raw.split("*"):
            if not factor:
                raise ValueError(f"empty factor in term {raw!r}")
            name, caret, tail = factor.partition("^")
            if name in index:
                e = 1
                if caret:
                    try:
                        e = int(tail)
                    except ValueError:
                        raise ValueError(f"bad exponent {tail!r} in {raw!r}") from None
                exp[index[name]] += e
            else:
                if caret:
                    raise ValueError(f"unknown variable {name!r} in {raw!r}")
                try:
                    coef *= int(factor)
                except ValueError:
                    raise ValueError(f"unknown factor {factor!r} in {raw!r}") from None
        out = out + LaurentPoly.monomial(vars, tuple(exp), coef)
    return out


def substitute_monomial(p, images, new_vars):
    """Apply the ring map sending each variable to a signed monomial.

    ``images`` maps every variable of ``p`` to ``(sign, exponent_vector)``
    over ``new_vars`` with sign +-1.  Substitution is a ring homomorphism,
    so it is checked against nothing and composes freely.

    >>> p = parse_poly("x*y - 1", ("x", "y"))
    >>> print(substitute_monomial(p, {"x": (1, (2,)), "y": (1, (1,))}, ("t",)))
    t^3 - 1
    """
    new_vars = tuple(new_vars)
    table = {}
    for i, v in enumerate(p.vars):
        if v not in images:
            raise ValueError(f"no image given for variable {v!r}")
        sign, exp = images[v]
        if sign not in (1, -1):
            raise ValueError("image sign must be +1 or -1")
        table[i] = (sign, tuple(int(e) for e in exp))
    out = {}
    for exp, coef in p.terms.items():
        new_exp = [0] * len(new_vars)
        sign = 1
        for i, e in enumerate(exp):
            if not e:
                continue
            s, image_exp = table[i]
            if s < 0 and e % 2:
                sign = -sign
            for j, ie in enumerate(image_exp):
                new_exp[j] += e * ie
        key = tuple(new_exp)
        out[key] = out.get(key, 0) + sign * coef
    return LaurentPoly(new_vars, out)


def nu_poly(k, var="t"):
    """The all-ones polynomial t^(k-1) + ... + t + 1; nu_0 = 0, nu_1 = 1.

    Satisfies (t - 1) * nu_k = t^k - 1.

    >>> print(nu_poly(3))
    t^2 + t + 1
    """
    if k < 0:
        raise ValueError("nu_poly needs k >= 0")
    return LaurentPoly((var,), {(i,): 1 for i in range(k)})
