"""Monomials, Artinian monomial ideals, and Hilbert functions.

Everything is exact integer arithmetic over exponent vectors.  Monomials in
``k[x_1, ..., x_n]`` are exponent tuples; the monomial order is plain lex with
``x_1 > x_2 > ... > x_n`` (compare exponent vectors at the first differing
position).  All values are immutable after construction; operations are pure.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field


class DimensionError(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class NotArtinianError(ValueError):
    """Operation requires an ideal containing a power of every variable."""


@dataclass(frozen=True)
class Monomial:
    """A monomial given by its exponent vector ``(e_1, ..., e_n)``."""

    exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(self.exps))
        if len(self.exps) < 1:
            raise ValueError("monomial needs at least one variable")
        if any(e < 0 for e in self.exps):
            raise ValueError(f"negative exponent in {self.exps}")

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def divides(self, other: Monomial) -> bool:
        if self.n != other.n:
            raise DimensionError(f"{self.n} vs {other.n} variables")
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: Monomial) -> Monomial:
        if self.n != other.n:
            raise DimensionError(f"{self.n} vs {other.n} variables")
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def times_var(self, i: int) -> Monomial:
        e = list(self.exps)
        e[i] += 1
        return Monomial(tuple(e))

    def shifted(self) -> Monomial:
        """Image under x_i -> x_{i+1}, i.e. prepend a zero exponent."""
        return Monomial((0,) + self.exps)

    # lex order on exponent vectors; total on fixed n
    def __lt__(self, other: Monomial) -> bool:
        if self.n != other.n:
            raise DimensionError(f"{self.n} vs {other.n} variables")
        return self.exps < other.exps

    def __le__(self, other: Monomial) -> bool:
        return self == other or self < other

    def __gt__(self, other: Monomial) -> bool:
        return other < self

    def __ge__(self, other: Monomial) -> bool:
        return other <= self


def lex_compare(m1: Monomial, m2: Monomial) -> int:
    """Lex comparison: +1 if m1 > m2, 0 if equal, -1 if m1 < m2.

    Higher exponent on an earlier variable wins.
    """
    if m1.n != m2.n:
        raise DimensionError(f"{m1.n} vs {m2.n} variables")
    if m1.exps == m2.exps:
        return 0
    return 1 if m1.exps > m2.exps else -1


def lcm(m1: Monomial, m2: Monomial) -> Monomial:
    if m1.n != m2.n:
        raise DimensionError(f"{m1.n} vs {m2.n} variables")
    return Monomial(tuple(max(a, b) for a, b in zip(m1.exps, m2.exps)))


def unit_monomial(n: int) -> Monomial:
    return Monomial((0,) * n)


def pure_power(n: int, i: int, e: int) -> Monomial:
    exps = [0] * n
    exps[i] = e
    return Monomial(tuple(exps))


def monomials_of_degree(n: int, d: int):
    """Yield all degree-d monomials in n variables in lex-descending order."""
    for exps in _exps_of_degree(n, d):
        yield Monomial(exps)


def _exps_of_degree(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in _exps_of_degree(n - 1, d - e):
            yield (e,) + rest


@dataclass(frozen=True)
class DegreeList:
    """Non-decreasing positive degrees ``a_1 <= ... <= a_n``."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if len(self.degrees) < 1:
            raise ValueError("empty degree list")
        if self.degrees[0] < 1:
            raise ValueError(f"degrees must be positive: {self.degrees}")
        if any(a > b for a, b in zip(self.degrees, self.degrees[1:])):
            raise ValueError(f"degrees must be non-decreasing: {self.degrees}")

    @classmethod
    def from_string(cls, text: str) -> DegreeList:
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad degree list {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def omega(self) -> int:
        return sum(self.degrees)

    @property
    def sigma_ci(self) -> int:
        """Least degree where the pure-powers ideal is the whole graded piece."""
        return self.omega - self.n + 1

    def multiplicity(self, j: int) -> int:
        return self.degrees.count(j)

    def tail(self) -> DegreeList:
        """Drop a_1 (the sub-list used for recursion into fewer variables)."""
        if self.n == 1:
            raise ValueError("tail of a length-1 degree list")
        return DegreeList(self.degrees[1:])

    def powers_ideal(self) -> MonomialIdeal:
        gens = tuple(pure_power(self.n, i, a) for i, a in enumerate(self.degrees))
        return MonomialIdeal(self.n, gens)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.degrees)


@dataclass(frozen=True)
class HilbertFunction:
    """Hilbert function of an Artinian quotient, stored up to its first zero.

    ``values`` always ends with exactly one 0.  The unit ideal's quotient is
    the zero ring, represented as ``(0,)``.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if not vals:
            raise ValueError("empty Hilbert function")
        if any(v < 0 for v in vals):
            raise ValueError(f"negative entries: {vals}")
        if vals[0] == 0:
            if any(vals):
                raise ValueError(f"H(0)=0 but later values nonzero: {vals}")
            vals = (0,)
        else:
            if vals[0] != 1:
                raise ValueError(f"H(0) must be 1 for a cyclic quotient: {vals}")
            if 0 in vals:
                k = vals.index(0)
                if any(vals[k:]):
                    raise ValueError(f"nonzero value after a zero: {vals}")
                vals = vals[: k + 1]
            else:
                vals = vals + (0,)
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_string(cls, text: str) -> HilbertFunction:
        toks = text.replace(",", " ").split()
        if not toks:
            raise ValueError("empty Hilbert function string")
        try:
            vals = tuple(int(t) for t in toks)
        except ValueError:
            raise ValueError(f"bad Hilbert function {text!r}") from None
        return cls(vals)

    def at(self, d: int) -> int:
        if d < 0 or d >= len(self.values):
            return 0
        return self.values[d]

    __call__ = at

    @property
    def sigma(self) -> int:
        """min { i : H(i) = 0 }."""
        return self.values.index(0)

    @property
    def rho(self) -> int:
        """Regularity of the sequence, sigma - 1."""
        return self.sigma - 1

    @property
    def total(self) -> int:
        return sum(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generating set.

    ``gens`` is lex-descending and minimal (no generator divides another);
    build instances with :func:`minimalize` / :meth:`from_gens` unless the
    input is already canonical.  The unit ideal is generated by the monomial
    with all-zero exponents.
    """

    n: int
    gens: tuple[Monomial, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one variable")
        if not self.gens:
            raise ValueError("zero ideal is not representable here")
        if any(g.n != self.n for g in self.gens):
            raise DimensionError("generator with wrong variable count")

    @classmethod
    def from_gens(cls, n: int, gens) -> MonomialIdeal:
        return minimalize(n, gens)

    @property
    def is_unit(self) -> bool:
        return self.gens[0].degree == 0

    def contains(self, m: Monomial) -> bool:
        if m.n != self.n:
            raise DimensionError(f"{m.n} vs {self.n} variables")
        me = m.exps
        for g in self.gens:
            ge = g.exps
            if all(a <= b for a, b in zip(ge, me)):
                return True
        return False

    def __contains__(self, m: Monomial) -> bool:
        return self.contains(m)

    def pure_power_profile(self) -> tuple[int | None, ...]:
        """Per variable, the least e with x_i^e in the ideal (None if none)."""
        prof: list[int | None] = [None] * self.n
        for g in self.gens:
            support = [i for i, e in enumerate(g.exps) if e > 0]
            if len(support) == 0:
                return (0,) * self.n
            if len(support) == 1:
                i = support[0]
                e = g.exps[i]
                if prof[i] is None or e < prof[i]:
                    prof[i] = e
        return tuple(prof)

    def profile_degrees(self) -> DegreeList:
        """Sorted pure-power profile as a DegreeList; requires Artinian."""
        prof = self.pure_power_profile()
        if any(p is None for p in prof):
            raise NotArtinianError(f"no pure power for some variable: {prof}")
        return DegreeList(tuple(sorted(prof)))  # type: ignore[arg-type]

    @property
    def is_artinian(self) -> bool:
        return self.is_unit or all(p is not None for p in self.pure_power_profile())

    def standard_monomials(self) -> dict[int, tuple[Monomial, ...]]:
        """Monomials outside the ideal, grouped by degree (lex-descending).

        Requires an Artinian ideal; the standard monomials sit inside the box
        bounded by the pure-power profile.
        """
        cached = self._cache.get("std")
        if cached is not None:
            return cached
        prof = self.pure_power_profile()
        if any(p is None for p in prof):
            raise NotArtinianError("ideal is not Artinian")
        by_degree: dict[int, list[Monomial]] = {}
        for exps in itertools.product(*(range(p) for p in prof)):
            m = Monomial(exps)
            if not self.contains(m):
                by_degree.setdefault(m.degree, []).append(m)
        result = {
            d: tuple(sorted(ms, reverse=True)) for d, ms in sorted(by_degree.items())
        }
        self._cache["std"] = result
        return result

    def hilbert_function(self) -> HilbertFunction:
        """H(R/I, d) = number of degree-d monomials outside I, down to 0."""
        cached = self._cache.get("hf")
        if cached is not None:
            return cached
        if self.is_unit:
            hf = HilbertFunction((0,))
        else:
            std = self.standard_monomials()
            top = max(std)
            hf = HilbertFunction(
                tuple(len(std.get(d, ())) for d in range(top + 1)) + (0,)
            )
        self._cache["hf"] = hf
        return hf

    def socle_monomials(self) -> dict[int, tuple[Monomial, ...]]:
        """Monomials m outside I with x_i * m in I for every i, by degree."""
        out: dict[int, list[Monomial]] = {}
        for d, ms in self.standard_monomials().items():
            for m in ms:
                if all(self.contains(m.times_var(i)) for i in range(self.n)):
                    out.setdefault(d, []).append(m)
        return {d: tuple(sorted(ms, reverse=True)) for d, ms in sorted(out.items())}

    def __str__(self) -> str:
        return format_ideal(self)


def minimalize(n: int, gens) -> MonomialIdeal:
    """Drop generators divisible by another; canonical lex-descending order."""
    pool = {Monomial(g.exps if isinstance(g, Monomial) else tuple(g)) for g in gens}
    minimal: list[Monomial] = []
    # ascending degree scan: a divisor always has smaller-or-equal degree
    for m in sorted(pool, key=lambda m: (m.degree, m.exps)):
        if not any(g.divides(m) for g in minimal):
            minimal.append(m)
    if not minimal:
        raise ValueError("zero ideal is not representable here")
    return MonomialIdeal(n, tuple(sorted(minimal, reverse=True)))


def intersect(i1: MonomialIdeal, i2: MonomialIdeal) -> MonomialIdeal:
    if i1.n != i2.n:
        raise DimensionError(f"{i1.n} vs {i2.n} variables")
    return minimalize(i1.n, (lcm(a, b) for a in i1.gens for b in i2.gens))


def _quotient_by_monomial(j: MonomialIdeal, g: Monomial) -> MonomialIdeal:
    gens = (
        Monomial(tuple(max(u - v, 0) for u, v in zip(m.exps, g.exps)))
        for m in j.gens
    )
    return minimalize(j.n, gens)


def colon(j: MonomialIdeal, i: MonomialIdeal) -> MonomialIdeal:
    """The residual (J : I) = { f : f*I inside J }, as a minimal monomial ideal.

    Computed as the intersection over generators g of I of the monomial
    quotients (J : g).
    """
    if j.n != i.n:
        raise DimensionError(f"{j.n} vs {i.n} variables")
    result: MonomialIdeal | None = None
    for g in i.gens:
        q = _quotient_by_monomial(j, g)
        result = q if result is None else intersect(result, q)
    assert result is not None
    return result


def add_maximal_power(i: MonomialIdeal, t: int) -> MonomialIdeal:
    """Minimalized I + (x_1, ..., x_n)^t."""
    if t < 1:
        raise ValueError(f"power must be >= 1, got {t}")
    return minimalize(i.n, tuple(i.gens) + tuple(monomials_of_degree(i.n, t)))


def is_lpp(i: MonomialIdeal, a: DegreeList) -> bool:
    """Is I a lex-plus-powers ideal for the degree list A?

    Requires the pure powers x_i^{a_i} among the minimal generators, and for
    every other minimal generator all lex-larger monomials of the same degree
    must already lie in the ideal.
    """
    if i.n != a.n:
        raise DimensionError(f"{i.n} vs {a.n} variables")
    powers = {pure_power(a.n, idx, e) for idx, e in enumerate(a.degrees)}
    gen_set = set(i.gens)
    if not powers <= gen_set:
        return False
    for g in gen_set - powers:
        for m in monomials_of_degree(i.n, g.degree):
            if m == g:
                break
            if not i.contains(m):
                return False
    return True


def is_lex_segment(i: MonomialIdeal, d: int) -> bool:
    """Is the degree-d piece of I closed upward under lex order?"""
    seen_gap = False
    for m in monomials_of_degree(i.n, d):
        if i.contains(m):
            if seen_gap:
                return False
        else:
            seen_gap = True
    return True


# ---------------------------------------------------------------------------
# text formats


_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m.exps, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(i: MonomialIdeal) -> str:
    return ", ".join(format_monomial(g) for g in i.gens)


def parse_monomial(text: str, n: int) -> Monomial:
    text = text.strip()
    exps = [0] * n
    if text == "1":
        return Monomial(tuple(exps))
    for factor in text.split("*"):
        factor = factor.strip()
        match = _FACTOR_RE.match(factor)
        if not match:
            raise ValueError(f"bad monomial factor {factor!r}")
        idx = int(match.group(1))
        if not 1 <= idx <= n:
            raise ValueError(f"variable x{idx} out of range for n={n}")
        exps[idx - 1] += int(match.group(2) or 1)
    return Monomial(tuple(exps))


def _infer_n(text: str) -> int:
    indices = [int(tok) for tok in re.findall(r"x(\d+)", text)]
    if not indices:
        raise ValueError(f"cannot infer variable count from {text!r}")
    return max(indices)


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    """Parse either the JSON format or the human generator list.

    JSON: ``{"n": 3, "gens": [[2,0,0], [0,3,0]]}``.  Human: comma-separated
    monomials like ``x1^2, x2^3, x1*x2^2`` (exponent 1 elided, 0 omitted).
    """
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad ideal JSON: {exc}") from None
        return ideal_from_json_dict(data)
    if n is None:
        n = _infer_n(text)
    gens = [parse_monomial(tok, n) for tok in text.split(",") if tok.strip()]
    if not gens:
        raise ValueError(f"no generators in {text!r}")
    return minimalize(n, gens)


def ideal_to_json_dict(i: MonomialIdeal) -> dict:
    return {"n": i.n, "gens": [list(g.exps) for g in i.gens]}


def ideal_from_json_dict(data: dict) -> MonomialIdeal:
    try:
        n = int(data["n"])
        gens = [Monomial(tuple(int(e) for e in g)) for g in data["gens"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad ideal JSON object: {exc}") from None
    return minimalize(n, gens)
