"""Exact symbolic quantum SU(2) at a rational deformation parameter.

Words in the generators a, a*, c, c* are rewritten to the normal form
a^k c*^m c^n with exact Laurent-polynomial coefficients in the parameter
mu, kept symbolic throughout. On top of the rewriting engine: the Haar
state as an exact rational function of mu, the comultiplication, both
antipodes, the compact-type convolution x * y = ((x phi) S^{-1} (x) id)
Delta(y), and the certified lower bound showing that no finite constant C
satisfies ||x * y|| <= C ||x||_1 ||y|| on this algebra.

Letters: 'a' and 'c' are the generators, 'A' and 'C' their adjoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, NamedTuple, Tuple

from .errors import AxiomFailure, BadParameters, EvalAtForbiddenMu

__all__ = [
    "Laurent",
    "MuRational",
    "Monomial",
    "PolyElement",
    "CounterexampleReport",
    "normalize",
    "haar",
    "counit",
    "comultiply",
    "antipode",
    "antipode_inverse",
    "convolve_compact",
    "certified_bound",
    "counterexample_report",
]

LETTERS = ("a", "A", "c", "C")
ADJOINT = {"a": "A", "A": "a", "c": "C", "C": "c"}


# ---------------------------------------------------------------------------
# exact scalars
# ---------------------------------------------------------------------------

class Laurent:
    """Laurent polynomial in mu with Fraction coefficients, canonical
    (no zero coefficients stored)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[int, Fraction] = None):
        clean = {}
        for k, v in (coeffs or {}).items():
            v = Fraction(v)
            if v != 0:
                clean[int(k)] = v
        self.coeffs = clean

    @staticmethod
    def const(value) -> "Laurent":
        return Laurent({0: Fraction(value)})

    @staticmethod
    def mu_power(k: int, value=1) -> "Laurent":
        return Laurent({k: Fraction(value)})

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return Laurent(out)

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __neg__(self) -> "Laurent":
        return Laurent({k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other: "Laurent") -> "Laurent":
        out: Dict[int, Fraction] = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return Laurent(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Laurent) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def min_exp(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def shift(self, k: int) -> "Laurent":
        return Laurent({e + k: v for e, v in self.coeffs.items()})

    def scale(self, value) -> "Laurent":
        value = Fraction(value)
        return Laurent({e: v * value for e, v in self.coeffs.items()})

    def evaluate(self, mu: Fraction) -> Fraction:
        mu = Fraction(mu)
        if mu == 0 and self.min_exp() < 0:
            raise EvalAtForbiddenMu("negative power of mu at mu = 0")
        return sum((v * mu ** e for e, v in self.coeffs.items()), Fraction(0))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            v = self.coeffs[e]
            term = str(v) if e == 0 else (
                f"{v}*mu" if e == 1 else f"{v}*mu^{e}")
            parts.append(term)
        return " + ".join(parts)


ZERO = Laurent()
ONE = Laurent.const(1)


def _poly_divmod(num: Dict[int, Fraction], den: Dict[int, Fraction]):
    """Polynomial division for nonnegative-exponent dictionaries."""
    num = dict(num)
    dd = max(den)
    dlead = den[dd]
    quo: Dict[int, Fraction] = {}
    while num and max(num) >= dd:
        nd = max(num)
        f = num[nd] / dlead
        quo[nd - dd] = f
        for e, v in den.items():
            k = e + nd - dd
            num[k] = num.get(k, Fraction(0)) - f * v
            if num[k] == 0:
                del num[k]
    return quo, num


def _poly_gcd(p: Dict[int, Fraction], q: Dict[int, Fraction]):
    while q:
        _, r = _poly_divmod(p, q)
        p, q = q, r
    if not p:
        return {0: Fraction(1)}
    lead = p[max(p)]
    return {e: v / lead for e, v in p.items()}


class MuRational:
    """Exact rational function of mu: Laurent numerator over a polynomial
    denominator normalized to constant term 1, with common factors removed."""

    __slots__ = ("num", "den")

    def __init__(self, num: Laurent, den: Laurent = None):
        den = den if den is not None else ONE
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        # clear negative exponents out of the denominator
        shift = den.min_exp()
        if shift != 0:
            den = den.shift(-shift)
            num = num.shift(-shift)
        # pull the numerator's negative part into a monomial factor, reduce
        # the polynomial parts by their gcd, then restore it
        nshift = min(num.min_exp(), 0)
        npoly = num.shift(-nshift).coeffs
        g = _poly_gcd(dict(npoly), dict(den.coeffs))
        if max(g) > 0:
            nq, nr = _poly_divmod(npoly, g)
            dq, dr = _poly_divmod(dict(den.coeffs), g)
            if not nr and not dr:
                npoly, den = nq, Laurent(dq)
        num = Laurent(npoly).shift(nshift)
        # constant term of the denominator scaled to 1
        c0 = den.coeffs.get(0)
        if c0 is None:
            # denominator divisible by mu: shift the power to the numerator
            k = den.min_exp()
            den = den.shift(-k)
            num = num.shift(-k)
            c0 = den.coeffs.get(0)
        self.num = num.scale(Fraction(1) / c0)
        self.den = den.scale(Fraction(1) / c0)

    @staticmethod
    def from_laurent(p: Laurent) -> "MuRational":
        return MuRational(p, ONE)

    @staticmethod
    def const(value) -> "MuRational":
        return MuRational(Laurent.const(value), ONE)

    def __add__(self, other: "MuRational") -> "MuRational":
        return MuRational(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    def __sub__(self, other: "MuRational") -> "MuRational":
        return self + (-other)

    def __neg__(self) -> "MuRational":
        return MuRational(-self.num, self.den)

    def __mul__(self, other) -> "MuRational":
        if isinstance(other, Laurent):
            other = MuRational.from_laurent(other)
        return MuRational(self.num * other.num, self.den * other.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, Laurent):
            other = MuRational.from_laurent(other)
        if not isinstance(other, MuRational):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def evaluate(self, mu: Fraction) -> Fraction:
        mu = Fraction(mu)
        if mu == 0 or mu == 1 or mu == -1:
            raise EvalAtForbiddenMu(f"mu = {mu} is outside the valid range")
        den = self.den.evaluate(mu)
        if den == 0:
            raise EvalAtForbiddenMu(f"denominator vanishes at mu = {mu}")
        return self.num.evaluate(mu) / den

    def __repr__(self) -> str:
        if self.den == ONE:
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"


# ---------------------------------------------------------------------------
# words and normal form
# ---------------------------------------------------------------------------

class Monomial(NamedTuple):
    """Normal-form basis word a^k c*^m c^n (a*^{-k} when k < 0)."""
    k: int
    m: int
    n: int

    def word(self) -> Tuple[str, ...]:
        a_part = ("a",) * self.k if self.k >= 0 else ("A",) * (-self.k)
        return a_part + ("C",) * self.m + ("c",) * self.n

    def __repr__(self) -> str:
        return f"a[{self.k},{self.m},{self.n}]"


UNIT_MONOMIAL = Monomial(0, 0, 0)

# c-letter followed by a-letter: move the a-letter left, with the exact
# mu power dictated by ac = mu ca, ac* = mu c* a and their adjoints
_SWAP_POWER = {("c", "a"): -1, ("C", "a"): -1, ("c", "A"): 1, ("C", "A"): 1}


def _reduce_word(word: Tuple[str, ...], coeff: Laurent,
                 out: Dict[Monomial, Laurent]) -> None:
    """Rewrite word to normal form, accumulating into out."""
    stack = [(word, coeff)]
    while stack:
        w, c = stack.pop()
        changed = False
        for i in range(len(w) - 1):
            pair = (w[i], w[i + 1])
            if pair in _SWAP_POWER:
                nw = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                stack.append((nw, c * Laurent.mu_power(_SWAP_POWER[pair])))
                changed = True
                break
            if pair == ("A", "a"):
                rest = w[:i] + w[i + 2:]
                stack.append((rest, c))
                stack.append((w[:i] + ("C", "c") + w[i + 2:], -c))
                changed = True
                break
            if pair == ("a", "A"):
                rest = w[:i] + w[i + 2:]
                stack.append((rest, c))
                stack.append((w[:i] + ("C", "c") + w[i + 2:],
                              (-c) * Laurent.mu_power(2)))
                changed = True
                break
            if pair == ("c", "C"):
                stack.append((w[:i] + ("C", "c") + w[i + 2:], c))
                changed = True
                break
        if changed:
            continue
        ks = sum(1 for l in w if l == "a") - sum(1 for l in w if l == "A")
        mono = Monomial(ks, sum(1 for l in w if l == "C"),
                        sum(1 for l in w if l == "c"))
        prev = out.get(mono, ZERO)
        total = prev + c
        if total.is_zero():
            out.pop(mono, None)
        else:
            out[mono] = total


class PolyElement:
    """Exact linear combination of normal-form monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Monomial, MuRational] = None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            if isinstance(coeff, Laurent):
                coeff = MuRational.from_laurent(coeff)
            elif not isinstance(coeff, MuRational):
                coeff = MuRational.const(coeff)
            if not coeff.is_zero():
                clean[mono] = coeff
        self.terms = clean

    @staticmethod
    def unit() -> "PolyElement":
        return PolyElement({UNIT_MONOMIAL: MuRational.const(1)})

    @staticmethod
    def zero() -> "PolyElement":
        return PolyElement()

    @staticmethod
    def generator(letter: str, power: int = 1) -> "PolyElement":
        if letter not in LETTERS:
            raise BadParameters(f"unknown letter {letter!r}")
        return normalize((letter,) * power)

    def __add__(self, other: "PolyElement") -> "PolyElement":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            cur = out.get(mono)
            out[mono] = coeff if cur is None else cur + coeff
        return PolyElement(out)

    def __sub__(self, other: "PolyElement") -> "PolyElement":
        return self + (-other)

    def __neg__(self) -> "PolyElement":
        return PolyElement({m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "PolyElement":
        if isinstance(other, (int, Fraction, Laurent, MuRational)):
            return self.scaled(other)
        out: Dict[Monomial, MuRational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                reduced: Dict[Monomial, Laurent] = {}
                _reduce_word(m1.word() + m2.word(), ONE, reduced)
                factor = c1 * c2
                for mono, lc in reduced.items():
                    add = factor * lc
                    cur = out.get(mono)
                    out[mono] = add if cur is None else cur + add
        return PolyElement(out)

    def scaled(self, value) -> "PolyElement":
        if isinstance(value, Laurent):
            value = MuRational.from_laurent(value)
        elif not isinstance(value, MuRational):
            value = MuRational.const(value)
        return PolyElement({m: c * value for m, c in self.terms.items()})

    def star(self) -> "PolyElement":
        out: Dict[Monomial, MuRational] = {}
        for mono, coeff in self.terms.items():
            reduced: Dict[Monomial, Laurent] = {}
            word = tuple(ADJOINT[l] for l in reversed(mono.word()))
            _reduce_word(word, ONE, reduced)
            for m2, lc in reduced.items():
                add = coeff * lc   # mu is real: coefficients self-conjugate
                cur = out.get(m2)
                out[m2] = add if cur is None else cur + add
        return PolyElement(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyElement) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, mu: Fraction) -> Dict[Monomial, Fraction]:
        return {m: c.evaluate(mu) for m, c in self.terms.items()}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"({coeff!r})*{mono!r}"
                 for mono, coeff in sorted(self.terms.items())]
        return " + ".join(parts)


def normalize(word: Iterable[str]) -> PolyElement:
    """Normal form of a word over {a, A, c, C} as a PolyElement."""
    word = tuple(word)
    for letter in word:
        if letter not in LETTERS:
            raise BadParameters(f"unknown letter {letter!r}")
    reduced: Dict[Monomial, Laurent] = {}
    _reduce_word(word, ONE, reduced)
    return PolyElement(dict(reduced))


# ---------------------------------------------------------------------------
# Hopf structure
# ---------------------------------------------------------------------------

def haar(x: PolyElement) -> MuRational:
    """Haar state: a[k,m,n] -> delta_{k,0} delta_{m,n} (1-mu^2)/(1-mu^{2m+2})."""
    total = MuRational.const(0)
    for mono, coeff in x.terms.items():
        if mono.k != 0 or mono.m != mono.n:
            continue
        value = MuRational(ONE - Laurent.mu_power(2),
                           ONE - Laurent.mu_power(2 * mono.m + 2))
        total = total + coeff * value
    return total


def counit(x: PolyElement) -> MuRational:
    """Counit: 1 on powers of a and a*, 0 on anything containing c or c*."""
    total = MuRational.const(0)
    for mono, coeff in x.terms.items():
        if mono.m == 0 and mono.n == 0:
            total = total + coeff
    return total


_DELTA = {
    "a": ((("a",), ("a",), ONE), (("C",), ("c",), Laurent.mu_power(1, -1))),
    "c": ((("c",), ("a",), ONE), (("A",), ("c",), ONE)),
    "A": ((("A",), ("A",), ONE), (("c",), ("C",), Laurent.mu_power(1, -1))),
    "C": ((("C",), ("A",), ONE), (("a",), ("C",), ONE)),
}


def comultiply(x: PolyElement) -> Dict[Tuple[Monomial, Monomial], MuRational]:
    """Comultiplication as a dictionary over pairs of normal-form monomials."""
    out: Dict[Tuple[Monomial, Monomial], MuRational] = {}
    for mono, coeff in x.terms.items():
        # expand letter by letter in the tensor algebra
        partial = [((), (), ONE)]
        for letter in mono.word():
            nxt = []
            for lw, rw, lc in partial:
                for dl, dr, dc in _DELTA[letter]:
                    nxt.append((lw + dl, rw + dr, lc * dc))
            partial = nxt
        for lw, rw, lc in partial:
            lred: Dict[Monomial, Laurent] = {}
            rred: Dict[Monomial, Laurent] = {}
            _reduce_word(lw, ONE, lred)
            _reduce_word(rw, ONE, rred)
            for lm, lcf in lred.items():
                for rm, rcf in rred.items():
                    add = coeff * (lc * lcf * rcf)
                    key = (lm, rm)
                    cur = out.get(key)
                    tot = add if cur is None else cur + add
                    if tot.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = tot
    return out


_ANTIPODE = {
    "a": (("A",), ONE),
    "A": (("a",), ONE),
    "c": (("c",), Laurent.mu_power(1, -1)),
    "C": (("C",), Laurent.mu_power(-1, -1)),
}

_ANTIPODE_INV = {
    "a": (("A",), ONE),
    "A": (("a",), ONE),
    "c": (("c",), Laurent.mu_power(-1, -1)),
    "C": (("C",), Laurent.mu_power(1, -1)),
}


def _apply_antimultiplicative(x: PolyElement, table) -> PolyElement:
    out: Dict[Monomial, MuRational] = {}
    for mono, coeff in x.terms.items():
        word = ()
        factor = ONE
        for letter in reversed(mono.word()):
            sub, c = table[letter]
            word = word + sub
            factor = factor * c
        reduced: Dict[Monomial, Laurent] = {}
        _reduce_word(word, factor, reduced)
        for m2, lc in reduced.items():
            add = coeff * lc
            cur = out.get(m2)
            out[m2] = add if cur is None else cur + add
    return PolyElement(out)


def antipode(x: PolyElement) -> PolyElement:
    """S: a -> a*, a* -> a, c -> -mu c, c* -> -mu^{-1} c*, antimultiplicative."""
    return _apply_antimultiplicative(x, _ANTIPODE)


def antipode_inverse(x: PolyElement) -> PolyElement:
    """S^{-1}: like S but c -> -mu^{-1} c and c* -> -mu c*."""
    return _apply_antimultiplicative(x, _ANTIPODE_INV)


def convolve_compact(x: PolyElement, y: PolyElement) -> PolyElement:
    """x * y = ((x phi) S^{-1} (x) id) Delta(y), with (x phi)(z) = phi(z x)."""
    out = PolyElement.zero()
    for (lm, rm), coeff in comultiply(y).items():
        left = PolyElement({lm: MuRational.const(1)})
        weight = haar(antipode_inverse(left) * x)
        if weight.is_zero():
            continue
        out = out + PolyElement({rm: weight * coeff})
    return out


# ---------------------------------------------------------------------------
# the unbounded-ratio certificate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CounterexampleReport:
    n: int
    mu: Fraction
    identity_holds: bool
    bound: Fraction
    bound_decimal: float
    convolution: PolyElement
    expected: PolyElement

    def __str__(self) -> str:
        return (f"n={self.n} mu={self.mu}: identity "
                f"{'holds' if self.identity_holds else 'FAILS'}, "
                f"certified lower bound {self.bound} "
                f"~ {self.bound_decimal:.4f}")


def _check_parameters(n: int, mu: Fraction) -> Fraction:
    mu = Fraction(mu)
    if not isinstance(n, int) or n < 1 or n > 4:
        raise BadParameters("n must be an integer in [1, 4]")
    if not 0 < abs(mu) < 1:
        raise BadParameters("mu must satisfy 0 < |mu| < 1")
    return mu


def certified_bound(n: int, mu: Fraction) -> Fraction:
    """L(n, mu) = mu^{-2n} (1 - mu^{2n+2}) / (1 - mu^{4n+2}), exact."""
    mu = _check_parameters(n, mu)
    return (mu ** (-2 * n)) * (1 - mu ** (2 * n + 2)) / (1 - mu ** (4 * n + 2))


def counterexample_report(n: int, mu) -> CounterexampleReport:
    """Exact certificate that convolution is unbounded from L^1 x L^inf.

    Computes c*^{2n} * c^{2n} symbolically, asserts it equals
    (-1/mu)^{2n} phi(c^{2n} c*^{2n}) a^{2n} exactly, and evaluates the
    certified lower bound L(n, mu) for the ratio ||x*y|| / (||x||_1 ||y||),
    using ||a^{2n}|| = 1 and ||c|| <= 1. L grows like mu^{-2n}, so the
    supremum of the ratio is infinite.
    """
    mu = _check_parameters(n, mu)

    x = PolyElement.generator("C", 2 * n)
    y = PolyElement.generator("c", 2 * n)
    conv = convolve_compact(x, y)

    phi_val = haar(y * x)   # phi(c^{2n} c*^{2n})
    sign_scale = MuRational.from_laurent(Laurent.mu_power(-2 * n))
    expected = PolyElement.generator("a", 2 * n).scaled(sign_scale * phi_val)

    if conv != expected:
        raise AxiomFailure(
            "symbolic convolution identity failed: "
            f"got {conv!r}, expected {expected!r}")

    bound = certified_bound(n, mu)
    return CounterexampleReport(
        n=n, mu=mu, identity_holds=True, bound=bound,
        bound_decimal=float(bound), convolution=conv, expected=expected)
