"""Exact multivariate Laurent polynomials with rational coefficients.

A polynomial is a map from exponent vectors (integers, negative allowed) to
nonzero Fractions.  Instances are immutable and always canonical:

  * the variable tuple lists, in the global variable order, exactly the
    variables that occur with a nonzero exponent somewhere;
  * no zero coefficients are stored.

Two mathematically equal polynomials therefore have identical
representations, which makes equality, hashing and the text serialization
byte-stable.  The global variable order is a natural order on names: an
alphabetic prefix compared lexicographically, then a numeric suffix compared
numerically, so ``u2 < u10 < v1``.

The text form sorts terms by graded reverse-lexicographic order (highest
first) and prints each term as ``coeff*var^exp*...``, e.g.
``-2/3*u1^2*v2^-1``; the zero polynomial prints as ``0``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence, Union

from ..errors import DivisionByZero, NegativeExponent, NotDivisible

Scalar = Union[int, Fraction]

_NAME_RE = re.compile(r"^([^\W\d]+)(\d*)$")


def var_key(name: str) -> tuple:
    """Sort key implementing the global variable order."""
    m = _NAME_RE.match(name)
    if m is None:
        return (name, -1, name)
    prefix, digits = m.group(1), m.group(2)
    return (prefix, int(digits) if digits else -1, name)


def grevlex_key(expvec: Sequence[int]) -> tuple:
    """Key whose natural tuple order is graded reverse-lexicographic."""
    return (sum(expvec), tuple(-e for e in reversed(expvec)))


class MultiPoly:
    """Immutable sparse Laurent polynomial over the rationals."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Scalar]):
        cleaned = {}
        for exps, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if len(exps) != len(variables):
                raise ValueError("exponent vector length != variable count")
            cleaned[tuple(exps)] = coeff
        # prune unused variables, then sort the survivors into global order
        nvars = len(variables)
        used = [i for i in range(nvars) if any(e[i] != 0 for e in cleaned)]
        order = sorted(used, key=lambda i: var_key(variables[i]))
        object.__setattr__(self, "vars", tuple(variables[i] for i in order))
        object.__setattr__(
            self,
            "terms",
            {tuple(e[i] for i in order): c for e, c in cleaned.items()},
        )
        if len(self.terms) != len(cleaned):
            raise ValueError("duplicate exponent vectors")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names")

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls((), {})

    @classmethod
    def const(cls, value: Scalar) -> "MultiPoly":
        return cls((), {(): Fraction(value)})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        if power == 0:
            return cls.const(1)
        return cls((name,), {(power,): Fraction(1)})

    @classmethod
    def monomial(cls, coeff: Scalar, powers: Mapping[str, int]) -> "MultiPoly":
        names = tuple(powers)
        return cls(names, {tuple(powers[n] for n in names): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (zero polynomial gives 0)."""
        if self.vars:
            raise ValueError(f"not a constant: {self}")
        return self.terms.get((), Fraction(0))

    def degree_in(self, name: str) -> int:
        """Highest exponent of ``name`` (0 if absent or zero polynomial)."""
        if name not in self.vars or not self.terms:
            return 0
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def low_degree_in(self, name: str) -> int:
        """Lowest exponent of ``name`` (0 if absent or zero polynomial)."""
        if name not in self.vars or not self.terms:
            return 0
        i = self.vars.index(name)
        return min(e[i] for e in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- alignment helpers -------------------------------------------------

    def _embed(self, allvars: tuple) -> dict:
        """Re-key the term dict onto a superset variable tuple."""
        if allvars == self.vars:
            return dict(self.terms)
        pos = [allvars.index(v) for v in self.vars]
        n = len(allvars)
        out = {}
        for exps, coeff in self.terms.items():
            vec = [0] * n
            for p, e in zip(pos, exps):
                vec[p] = e
            out[tuple(vec)] = coeff
        return out

    @staticmethod
    def _union_vars(a: "MultiPoly", b: "MultiPoly") -> tuple:
        return tuple(sorted(set(a.vars) | set(b.vars), key=var_key))

    @staticmethod
    def _coerce(value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return MultiPoly.const(value)
        return NotImplemented

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        allvars = self._union_vars(self, other)
        terms = self._embed(allvars)
        for exps, coeff in other._embed(allvars).items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return MultiPoly(allvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return MultiPoly.zero()
        if other.is_constant():
            c = other.constant_value()
            return MultiPoly(self.vars, {e: k * c for e, k in self.terms.items()})
        if self.is_constant():
            c = self.constant_value()
            return MultiPoly(other.vars, {e: k * c for e, k in other.terms.items()})
        allvars = self._union_vars(self, other)
        a = self._embed(allvars)
        b = other._embed(allvars)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                prev = out.get(key)
                out[key] = ca * cb if prev is None else prev + ca * cb
        return MultiPoly(allvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int):
            raise TypeError("exponent must be int")
        if n == 0:
            return MultiPoly.const(1)
        if n < 0:
            return self.monomial_inverse() ** (-n)
        result = MultiPoly.const(1)
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def monomial_inverse(self) -> "MultiPoly":
        """Inverse of a single-term polynomial; other inputs are not units."""
        if len(self.terms) != 1:
            raise NotDivisible(f"not an invertible monomial: {self}")
        ((exps, coeff),) = self.terms.items()
        return MultiPoly(self.vars, {tuple(-e for e in exps): 1 / coeff})

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    # -- calculus and extraction -------------------------------------------

    def diff(self, name: str, order: int = 1) -> "MultiPoly":
        """Exact partial derivative; Laurent powers of ``name`` are refused."""
        if order < 1:
            raise ValueError("order must be >= 1")
        if name not in self.vars:
            return MultiPoly.zero()
        i = self.vars.index(name)
        if any(e[i] < 0 for e in self.terms):
            raise NegativeExponent(f"cannot differentiate Laurent variable {name}")
        cur = self
        for _ in range(order):
            if name not in cur.vars:
                return MultiPoly.zero()
            i = cur.vars.index(name)
            terms = {}
            for exps, coeff in cur.terms.items():
                e = exps[i]
                if e == 0:
                    continue
                key = exps[:i] + (e - 1,) + exps[i + 1 :]
                terms[key] = coeff * e
            cur = MultiPoly(cur.vars, terms)
        return cur

    def coeff_of(self, name: str, power: int) -> "MultiPoly":
        """Coefficient of ``name**power`` as a polynomial in the other vars."""
        if name not in self.vars:
            return self if power == 0 else MultiPoly.zero()
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1 :]
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[i] == power:
                terms[exps[:i] + exps[i + 1 :]] = coeff
        return MultiPoly(rest, terms)

    def subs(self, assignment: Mapping[str, Union[Scalar, "MultiPoly"]]) -> "MultiPoly":
        """Substitute values for variables (partial assignments allowed).

        A variable occurring with negative exponents may receive a nonzero
        rational or an invertible monomial; assigning 0 there raises
        DivisionByZero.
        """
        relevant = {k: v for k, v in assignment.items() if k in self.vars}
        if not relevant:
            return self
        idx = {name: self.vars.index(name) for name in relevant}
        values = {}
        for name, val in relevant.items():
            val = val if isinstance(val, MultiPoly) else MultiPoly.const(val)
            i = idx[name]
            if any(e[i] < 0 for e in self.terms) and val.is_zero():
                raise DivisionByZero(f"{name} assigned 0 but occurs with negative exponent")
            values[name] = val
        keep = [i for i, v in enumerate(self.vars) if self.vars[i] not in relevant]
        result = MultiPoly.zero()
        pow_cache: dict = {}
        for exps, coeff in self.terms.items():
            term = MultiPoly(
                tuple(self.vars[i] for i in keep),
                {tuple(exps[i] for i in keep): coeff},
            )
            for name, val in values.items():
                e = exps[idx[name]]
                if e == 0:
                    continue
                key = (name, e)
                if key not in pow_cache:
                    pow_cache[key] = val ** e
                term = term * pow_cache[key]
            result = result + term
        return result

    def eval_rational(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Full evaluation at rational values; all variables must be covered."""
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            raise ValueError(f"unassigned variables: {missing}")
        total = Fraction(0)
        vals = [Fraction(assignment[v]) for v in self.vars]
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, exps):
                if e == 0:
                    continue
                if v == 0 and e < 0:
                    raise DivisionByZero("0 raised to a negative power")
                term *= v ** e
            total += term
        return total

    # -- division ----------------------------------------------------------

    def divide_exact(self, divisor: "MultiPoly", max_steps: int | None = None) -> "MultiPoly":
        """Exact division; raises NotDivisible on a nonzero remainder.

        ``max_steps`` bounds the reduction loop for opportunistic callers
        (treating a long division as not divisible); exact callers leave it
        None.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return MultiPoly.zero()
        if divisor.is_constant():
            c = divisor.constant_value()
            return MultiPoly(self.vars, {e: k / c for e, k in self.terms.items()})
        if len(divisor.terms) == 1:
            return self * divisor.monomial_inverse()
        # shift both operands into the ordinary polynomial ring
        shift_n = _laurent_shift(self)
        shift_d = _laurent_shift(divisor)
        num = self * shift_n if shift_n is not None else self
        den = divisor * shift_d if shift_d is not None else divisor
        allvars = self._union_vars(num, den)
        nterms = num._embed(allvars)
        dterms = den._embed(allvars)
        lead_d = max(dterms, key=grevlex_key)
        lead_dc = dterms[lead_d]
        quot: dict = {}
        steps = 0
        while nterms:
            steps += 1
            if max_steps is not None and steps > max_steps:
                raise NotDivisible("step budget exhausted")
            lead_n = max(nterms, key=grevlex_key)
            qexp = tuple(a - b for a, b in zip(lead_n, lead_d))
            if any(e < 0 for e in qexp):
                raise NotDivisible("leading term not divisible")
            qc = nterms[lead_n] / lead_dc
            quot[qexp] = quot.get(qexp, Fraction(0)) + qc
            for de, dc in dterms.items():
                key = tuple(a + b for a, b in zip(qexp, de))
                val = nterms.get(key, Fraction(0)) - qc * dc
                if val == 0:
                    nterms.pop(key, None)
                else:
                    nterms[key] = val
        result = MultiPoly(allvars, quot)
        # computed (p*sn)/(d*sd); undo the shifts: p/d = result * sd / sn
        if shift_d is not None:
            result = result * shift_d
        if shift_n is not None:
            result = result * shift_n.monomial_inverse()
        return result

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.divide_exact(self)
            return True
        except NotDivisible:
            return False

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators / lcm of denominators)."""
        if not self.terms:
            return Fraction(0)
        from math import gcd, lcm

        nums = [abs(c.numerator) for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        g = 0
        for x in nums:
            g = gcd(g, x)
        l = 1
        for x in dens:
            l = lcm(l, x)
        return Fraction(g, l)

    # -- serialization -----------------------------------------------------

    def sorted_terms(self) -> list:
        """Terms in canonical (grevlex-descending) order."""
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = [str(coeff)]
            for name, e in zip(self.vars, exps):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    __str__ = to_str

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_str()!r})"


def _laurent_shift(p: MultiPoly) -> MultiPoly | None:
    """Monomial m with m*p free of negative exponents, or None if unneeded."""
    if not p.terms:
        return None
    mins = [min(e[i] for e in p.terms) for i in range(len(p.vars))]
    if all(m >= 0 for m in mins):
        return None
    powers = {v: -m for v, m in zip(p.vars, mins) if m < 0}
    return MultiPoly.monomial(1, powers)


# -- module-level operation surface ---------------------------------------


def mpoly_arith(lhs: MultiPoly, rhs: MultiPoly, op: str) -> MultiPoly:
    """Ring arithmetic dispatch: op is one of 'add', 'sub', 'mul'."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown op {op!r}")


def mpoly_eval(p: MultiPoly, assignment: Mapping[str, Union[Scalar, MultiPoly]]):
    """Substitute; returns a Fraction when nothing symbolic remains."""
    result = p.subs(assignment)
    if result.is_constant():
        return result.constant_value()
    return result


def mpoly_diff(p: MultiPoly, name: str, order: int = 1) -> MultiPoly:
    return p.diff(name, order)


def coeff_extract(p: MultiPoly, name: str, power: int) -> MultiPoly:
    return p.coeff_of(name, power)


ZERO = MultiPoly.zero()
ONE = MultiPoly.const(1)


def poly_vars(prefix: str, count: int, start: int = 1) -> list:
    """Convenience list of variables prefix1..prefixN."""
    return [MultiPoly.var(f"{prefix}{i}") for i in range(start, start + count)]
