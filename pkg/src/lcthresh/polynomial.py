"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as a mapping ``exponent tuple -> Fraction`` with no zero
coefficients, so two polynomials over the same variables are equal exactly
when their term maps are equal.  Besides ring arithmetic the module provides
the degree bookkeeping used by the threshold computations (homogeneous and
weighted-homogeneous parts, weighted orders, blowup charts) and a small
amount of factor detection for binary and ternary forms.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterator, Mapping, Sequence

Exponents = tuple[int, ...]

MIN_ARITY = 2
MAX_ARITY = 4


class ParseError(ValueError):
    """Raised for malformed polynomial text; ``offset`` is a UTF-8 byte offset."""

    def __init__(self, message: str, text: str, index: int):
        self.offset = len(text[:index].encode("utf-8"))
        self.text = text
        super().__init__(f"{message} at byte {self.offset}")


class Polynomial:
    """Immutable sparse polynomial over the rationals.

    >>> p = parse("x^2 - 1/2y", "xy")
    >>> str(p)
    'x^2-1/2y'
    """

    __slots__ = ("_variables", "_terms", "_hash")

    def __init__(self, variables: str, terms: Mapping[Exponents, object] | None = None):
        if len(set(variables)) != len(variables) or not all(v.isalpha() and len(v) == 1 for v in variables):
            raise ValueError(f"variables must be distinct single letters, got {variables!r}")
        if not MIN_ARITY <= len(variables) <= MAX_ARITY:
            raise ValueError(f"arity must be between {MIN_ARITY} and {MAX_ARITY}, got {len(variables)}")
        n = len(variables)
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not match arity {n}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = Fraction(coeff)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self._variables = variables
        self._terms = clean
        self._hash: int | None = None

    # -- construction helpers ------------------------------------------------

    @classmethod
    def constant(cls, variables: str, value: object) -> Polynomial:
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: str, name: str) -> Polynomial:
        exps = tuple(int(v == name) for v in variables)
        if sum(exps) != 1:
            raise ValueError(f"unknown variable {name!r}")
        return cls(variables, {exps: 1})

    @classmethod
    def monomial(cls, variables: str, exps: Sequence[int], coeff: object = 1) -> Polynomial:
        return cls(variables, {tuple(exps): coeff})

    @classmethod
    def _raw(cls, variables: str, terms: dict[Exponents, Fraction]) -> Polynomial:
        # terms must already be clean; skips validation on hot paths
        p = object.__new__(cls)
        p._variables = variables
        p._terms = terms
        p._hash = None
        return p

    # -- basic accessors -----------------------------------------------------

    @property
    def variables(self) -> str:
        return self._variables

    @property
    def arity(self) -> int:
        return len(self._variables)

    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self._terms.items())

    def support(self) -> frozenset[Exponents]:
        return frozenset(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def with_variables(self, variables: str) -> Polynomial:
        """Re-embed into a superset of variables (missing ones get exponent 0)."""
        index = []
        for v in self._variables:
            if v not in variables:
                raise ValueError(f"variable {v!r} missing from {variables!r}")
            index.append(variables.index(v))
        terms = {}
        for exps, c in self._terms.items():
            new = [0] * len(variables)
            for i, e in zip(index, exps):
                new[i] = e
            terms[tuple(new)] = c
        return Polynomial(variables, terms)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other: object) -> Polynomial:
        if isinstance(other, Polynomial):
            if other._variables != self._variables:
                raise ValueError(f"variable mismatch: {self._variables!r} vs {other._variables!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self._variables, other)
        return NotImplemented

    def __add__(self, other: object) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial._raw(self._variables, terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: object) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Polynomial._raw(self._variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self._variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, factor: object) -> Polynomial:
        return self * Fraction(factor)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._variables == other._variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self._variables, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._variables, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation / substitution -------------------------------------------

    def evaluate(self, point: Sequence[object]) -> Fraction:
        if len(point) != self.arity:
            raise ValueError("point dimension does not match arity")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(pt, exps):
                if e:
                    term *= v**e
            total += term
        return total

    def compose(self, images: Sequence[Polynomial]) -> Polynomial:
        """Substitute ``images[i]`` for the i-th variable (all images share variables)."""
        if len(images) != self.arity:
            raise ValueError("need one image per variable")
        target = images[0].variables
        result = Polynomial(target)
        powers: list[dict[int, Polynomial]] = [{} for _ in images]
        for exps, c in self._terms.items():
            term = Polynomial.constant(target, c)
            for i, e in enumerate(exps):
                if e:
                    if e not in powers[i]:
                        powers[i][e] = images[i] ** e
                    term = term * powers[i][e]
            result = result + term
        return result

    # -- printing ------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in graded-lex descending order."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, (exps, c) in enumerate(self.sorted_terms()):
            mono = "".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self._variables, exps) if e
            )
            sign = "-" if c < 0 else ("+" if k else "")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            else:
                body = _format_rational(mag) + mono
            out.append(sign + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, {self._variables!r})"


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


class _Parser:
    # expr := ['-'] term (('+'|'-') term)*
    # term := factor (('*' | juxtaposition) factor)*
    # factor := base ('^' uint)?
    # base := uint ['/' uint] | letter | '(' expr ')'

    def __init__(self, text: str, variables: str):
        self.text = text
        self.vars = variables
        self.pos = 0

    def error(self, message: str, index: int | None = None) -> ParseError:
        return ParseError(message, self.text, self.pos if index is None else index)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            raise self.error("expected non-negative integer literal")
        return int(self.text[start:self.pos])

    def parse(self) -> Polynomial:
        if not self.text.strip():
            raise self.error("empty expression")
        p = self.expr()
        if self.peek():
            raise self.error(f"unexpected character {self.peek()!r}")
        return p

    def expr(self) -> Polynomial:
        negate = False
        if self.peek() == "-":
            self.pos += 1
            negate = True
        p = self.term()
        if negate:
            p = -p
        while self.peek() and self.peek() in "+-":
            op = self.text[self.pos]
            self.pos += 1
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def starts_factor(self, ch: str) -> bool:
        return ch == "(" or ch.isdigit() or ch.isalpha()

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                p = p * self.factor()
            elif ch and self.starts_factor(ch):
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
                raise self.error("exponent must be a non-negative integer literal")
            base = base ** self.uint()
        return base

    def base(self) -> Polynomial:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            p = self.expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return p
        if ch.isdigit():
            num = self.uint()
            if self.peek() == "/":
                slash = self.pos
                self.pos += 1
                den = self.uint()
                if den == 0:
                    raise self.error("zero denominator", slash)
                return Polynomial.constant(self.vars, Fraction(num, den))
            return Polynomial.constant(self.vars, num)
        if ch.isalpha():
            if ch not in self.vars:
                raise self.error(f"unknown variable {ch!r}")
            self.pos += 1
            return Polynomial.variable(self.vars, ch)
        if not ch:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected character {ch!r}")


def parse(text: str, variables: str = "xyz") -> Polynomial:
    """Parse ``text`` into an expanded polynomial over ``variables``.

    Accepts integers (and ``p/q`` literals), single-letter variables, ``+ - * ^``,
    parentheses, and juxtaposition as multiplication.
    """
    Polynomial(variables)  # validates the variable list
    return _Parser(text, variables).parse()


# ---------------------------------------------------------------------------
# Degree and weight analysis
# ---------------------------------------------------------------------------


def _require_nonzero(f: Polynomial) -> None:
    if f.is_zero():
        raise ValueError("operation undefined for the zero polynomial")


def _check_weight(f: Polynomial, w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if len(w) != f.arity:
        raise ValueError(f"weight length {len(w)} does not match arity {f.arity}")
    if any(x < 1 for x in w):
        raise ValueError("weights must be positive")
    return w


def multiplicity(f: Polynomial) -> int:
    """Order of vanishing at the origin: the least total degree of a term."""
    _require_nonzero(f)
    return min(sum(e) for e in f.support())


def homogeneous_part(f: Polynomial, m: int) -> Polynomial:
    if m < 0:
        raise ValueError("degree must be non-negative")
    return Polynomial._raw(f.variables, {e: c for e, c in f.items() if sum(e) == m})


def weighted_degree(exps: Sequence[int], w: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(exps, w))


def weighted_order(f: Polynomial, w: Sequence[int]) -> int:
    """Minimum of ``sum(w_i * a_i)`` over the terms of ``f``."""
    _require_nonzero(f)
    w = _check_weight(f, w)
    return min(weighted_degree(e, w) for e in f.support())


def weighted_part(f: Polynomial, w: Sequence[int]) -> Polynomial:
    """The lowest w-degree part of ``f`` (its initial form for the weight)."""
    d = weighted_order(f, w)
    return Polynomial._raw(f.variables, {e: c for e, c in f.items() if weighted_degree(e, w) == d})


def is_weighted_homogeneous(f: Polynomial, w: Sequence[int]) -> bool:
    w = _check_weight(f, w)
    return len({weighted_degree(e, w) for e in f.support()}) <= 1


def strict_transform_chart(f: Polynomial, w: Sequence[int], i: int) -> Polynomial:
    """Equation of the strict transform in the ``x_i != 0`` chart of the w-blowup.

    Substitutes ``x_i -> x_i^{w_i}``, ``x_j -> x_i^{w_j} x_j`` and divides by
    ``x_i^{ord_w f}``.
    """
    _require_nonzero(f)
    w = _check_weight(f, w)
    if not 0 <= i < f.arity:
        raise IndexError(f"chart index {i} out of range for arity {f.arity}")
    d = weighted_order(f, w)
    terms = {}
    for exps, c in f.items():
        new = list(exps)
        new[i] = weighted_degree(exps, w) - d
        terms[tuple(new)] = c
    return Polynomial(f.variables, terms)


def chart_substitution(f: Polynomial, w: Sequence[int], i: int) -> Polynomial:
    """``f`` composed with the chart map, without dividing out the exceptional power."""
    images = []
    for j, v in enumerate(f.variables):
        xi_pow = Polynomial.monomial(f.variables, [w[j] if k == i else 0 for k in range(f.arity)])
        images.append(xi_pow if j == i else xi_pow * Polynomial.variable(f.variables, v))
    return f.compose(images)


def divide_out_coordinate_factors(f: Polynomial) -> tuple[Polynomial, tuple[int, ...]]:
    """Strip the largest monomial dividing ``f``; return the cofactor and its exponents."""
    _require_nonzero(f)
    k = tuple(min(e[i] for e in f.support()) for i in range(f.arity))
    terms = {tuple(a - b for a, b in zip(e, k)): c for e, c in f.items()}
    return Polynomial._raw(f.variables, terms), k


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient ``f / g``; raises ``ValueError`` when ``g`` does not divide ``f``."""
    q, r = divmod_poly(f, g)
    if r:
        raise ValueError(f"{g} does not divide {f}")
    return q


def divmod_poly(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Division with remainder by a single divisor in lex order."""
    _require_nonzero(g)
    if f.variables != g.variables:
        raise ValueError("variable mismatch")
    lead_e = max(g.support())
    lead_c = g.coefficient(lead_e)
    rem = dict(f._terms)
    quot: dict[Exponents, Fraction] = {}
    leftover: dict[Exponents, Fraction] = {}
    while rem:
        e = max(rem)
        c = rem[e]
        if all(a >= b for a, b in zip(e, lead_e)):
            qe = tuple(a - b for a, b in zip(e, lead_e))
            qc = c / lead_c
            quot[qe] = quot.get(qe, 0) + qc
            for ge, gc in g.items():
                te = tuple(a + b for a, b in zip(qe, ge))
                s = rem.get(te, 0) - qc * gc
                if s:
                    rem[te] = s
                else:
                    rem.pop(te, None)
        else:
            leftover[e] = c
            del rem[e]
    return Polynomial(f.variables, quot), Polynomial._raw(f.variables, leftover)


def project(f: Polynomial, keep: str) -> Polynomial:
    """Drop variables not in ``keep``; every dropped variable must have exponent 0."""
    idx = [f.variables.index(v) for v in keep]
    terms = {}
    for exps, c in f.items():
        if any(exps[i] for i in range(f.arity) if i not in idx):
            raise ValueError(f"{f} involves variables outside {keep!r}")
        terms[tuple(exps[i] for i in idx)] = c
    return Polynomial(keep, terms)


# ---------------------------------------------------------------------------
# Univariate helpers (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

Univariate = list[Fraction]


def _trim(p: Univariate) -> Univariate:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _u_divmod(a: Univariate, b: Univariate) -> tuple[Univariate, Univariate]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        coef = r[-1] / b[-1]
        q[shift] = coef
        for i, bc in enumerate(b):
            r[shift + i] -= coef * bc
        r = _trim(r)
    return _trim(q), r


def _u_monic(p: Univariate) -> Univariate:
    p = _trim(p)
    return [c / p[-1] for c in p] if p else p


def _u_gcd(a: Univariate, b: Univariate) -> Univariate:
    a, b = _u_monic(a), _u_monic(b)
    while b:
        _, r = _u_divmod(a, b)
        a, b = b, _u_monic(r)
    return a


def _u_derivative(p: Univariate) -> Univariate:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _u_sub(a: Univariate, b: Univariate) -> Univariate:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def squarefree_decomposition(p: Sequence[object]) -> list[tuple[Univariate, int]]:
    """Yun's algorithm: monic squarefree factors paired with their multiplicity."""
    f = _trim([Fraction(c) for c in p])
    if not f:
        raise ValueError("zero polynomial has no squarefree decomposition")
    if len(f) == 1:
        return []
    fp = _u_derivative(f)
    a = _u_gcd(f, fp)
    b, _ = _u_divmod(f, a)
    c, _ = _u_divmod(fp, a)
    d = _u_sub(c, _u_derivative(b))
    out = []
    i = 1
    while len(b) > 1:
        a = _u_gcd(b, d)
        b, _ = _u_divmod(b, a)
        c, _ = _u_divmod(d, a)
        d = _u_sub(c, _u_derivative(b))
        if len(a) > 1:
            out.append((a, i))
        i += 1
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p: Sequence[object]) -> list[Fraction]:
    """Distinct rational roots of a nonzero univariate polynomial."""
    f = _trim([Fraction(c) for c in p])
    if not f:
        raise ValueError("zero polynomial")
    roots = []
    if f[0] == 0:
        roots.append(Fraction(0))
        while f and f[0] == 0:
            f = f[1:]
    if len(f) <= 1:
        return roots
    scale = lcm(*(c.denominator for c in f))
    ints = [int(c * scale) for c in f]
    g = gcd(*ints)
    ints = [c // g for c in ints]
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and sum(c * cand**i for i, c in enumerate(ints)) == 0:
                    roots.append(cand)
    return roots


# ---------------------------------------------------------------------------
# Forms: repeated linear factors
# ---------------------------------------------------------------------------


def _binary_dehomogenize(f: Polynomial) -> tuple[Univariate, int]:
    """Return f(x, 1) as a coefficient list and the power of y dividing f."""
    deg = f.total_degree()
    coeffs = [Fraction(0)] * (deg + 1)
    for (a, _b), c in f.items():
        coeffs[a] = c
    y_power = min(b for _a, b in f.support())
    return coeffs, y_power


def binary_form_max_multiplicity(f: Polynomial) -> int:
    """Largest multiplicity of a linear factor of a binary form over C."""
    if f.arity != 2:
        raise ValueError("expected a binary form")
    _require_nonzero(f)
    if not f.is_homogeneous():
        raise ValueError(f"{f} is not homogeneous")
    coeffs, y_power = _binary_dehomogenize(f)
    x_power = min(a for a, _b in f.support())
    best = max(x_power, y_power)
    for _factor, mult in squarefree_decomposition(coeffs):
        best = max(best, mult)
    return best


def binary_linear_factors(f: Polynomial) -> list[tuple[Fraction, Fraction]]:
    """Rational linear factors ``a*u + b*v`` of a nonzero binary form, normalized."""
    coeffs, y_power = _binary_dehomogenize(f)
    out: list[tuple[Fraction, Fraction]] = []
    if y_power:
        out.append((Fraction(0), Fraction(1)))
    # a root r of f(u, 1) corresponds to the factor u - r v
    for r in rational_roots(coeffs):
        out.append((Fraction(1), -r))
    return out


def _factor_multiplicity(f: Polynomial, lin: Polynomial) -> int:
    k = 0
    while f:
        q, r = divmod_poly(f, lin)
        if r:
            break
        f = q
        k += 1
    return k


def max_linear_factor_multiplicity(f: Polynomial) -> int:
    """Largest multiplicity of a rational linear factor of a ternary form.

    Pure coordinate factors are stripped first; the remaining candidates are
    rebuilt from the rational linear factors of the restrictions to the three
    coordinate planes and confirmed by exact division.
    """
    if f.arity != 3:
        raise ValueError("expected a ternary form")
    _require_nonzero(f)
    if not f.is_homogeneous():
        raise ValueError(f"{f} is not homogeneous")
    h, k = divide_out_coordinate_factors(f)
    best = max(k)
    if h.total_degree() == 0:
        return best
    x, y, z = (Polynomial.variable(f.variables, v) for v in f.variables)
    zero = Polynomial.constant(f.variables, 0)

    def restrict(drop: int) -> Polynomial:
        images = [x, y, z]
        images[drop] = zero
        keep = "".join(v for i, v in enumerate(f.variables) if i != drop)
        return project(h.compose(images), keep)

    on_z0 = binary_linear_factors(restrict(2))  # a x + b y
    on_y0 = binary_linear_factors(restrict(1))  # a x + c z
    on_x0 = binary_linear_factors(restrict(0))  # b y + c z
    candidates = set()
    for a, b in on_z0:
        if a == 0:
            continue
        for a2, c in on_y0:
            if a2 == 0:
                continue
            candidates.add(x + (b / a) * y + (c / a2) * z)
    for b, c in on_x0:
        if b != 0:
            candidates.add(y + (c / b) * z)
    for lin in candidates:
        best = max(best, _factor_multiplicity(h, lin))
    return best


def ternary_cubic_repeated_factor(f: Polynomial) -> str:
    """Classify a ternary cubic form as ``"triple"``, ``"double"`` or ``"squarefree"``.

    A repeated linear factor of a rational cubic is Galois-stable, hence
    rational, so searching rational linear factors is complete.
    """
    if f.arity != 3 or f.is_zero() or not f.is_homogeneous() or f.total_degree() != 3:
        raise ValueError(f"expected a nonzero ternary cubic form, got {f}")
    mult = max_linear_factor_multiplicity(f)
    return {3: "triple", 2: "double"}.get(mult, "squarefree")

