"""Monomial ideals: minimal generators, lex/stable predicates, colons,
the splitting along the first variable, Hilbert counts, and
lexification.

An ideal is stored as its minimal generating set, sorted glex-descending.
The zero and unit ideals get dedicated sentinel types instead of being
shoehorned into generator lists; operations that can collapse to either
(colons, for instance) return the sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Union

from .monomial import (
    Monomial,
    divides,
    div_var,
    format_monomial,
    glex_key,
    max_index,
    monomials_of_degree,
    mul_var,
    variable,
)


@dataclass(frozen=True)
class UnitIdeal:
    """The whole ring, (1)."""

    n: int


@dataclass(frozen=True)
class ZeroIdeal:
    """The zero ideal, (0)."""

    n: int


class MonomialIdeal:
    """A nonzero proper monomial ideal given by minimal generators.

    Invariants: ``gens`` is nonempty, glex-descending, duplicate-free,
    and every generator has degree >= 1.  Construct through
    :func:`minimalize` unless the input is already known minimal.
    """

    __slots__ = ("n", "gens", "_hash")

    def __init__(self, n: int, gens):
        gens = tuple(gens)
        if not gens:
            raise ValueError(
                "empty generator list; use ZeroIdeal for the zero ideal"
            )
        for g in gens:
            if g.nvars != n:
                raise ValueError(f"{g!r} does not live in {n} variables")
            if g.degree == 0:
                raise ValueError(
                    "unit generator; use UnitIdeal for the whole ring"
                )
        ordered = tuple(sorted(gens, key=glex_key, reverse=True))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate generator {a!r}")
        self.n = n
        self.gens = ordered
        self._hash = hash((n, ordered))

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"MonomialIdeal({self.n}, {format_ideal(self)})"


Ideal = Union[MonomialIdeal, UnitIdeal, ZeroIdeal]


class Split(NamedTuple):
    """Result of splitting L = x_1 * colon + xfree along x_1."""

    colon: Union[MonomialIdeal, UnitIdeal]
    xfree: Union[MonomialIdeal, ZeroIdeal]


def minimalize(monos, n: int | None = None):
    """Build an ideal from arbitrary monomial generators.

    Divisible generators are discarded; duplicates collapse.  A unit
    generator makes the whole ring, returned as UnitIdeal.  An empty
    input is an error: the zero ideal is never represented implicitly.
    """
    monos = list(monos)
    if not monos:
        raise ValueError(
            "empty generator list; use ZeroIdeal for the zero ideal"
        )
    if n is None:
        n = monos[0].nvars
    for m in monos:
        if m.nvars != n:
            raise ValueError(f"{m!r} does not live in {n} variables")
    if any(m.degree == 0 for m in monos):
        return UnitIdeal(n)
    # Ascending degree: a proper divisor has strictly smaller degree,
    # so each candidate only needs testing against already-kept gens.
    candidates = sorted(set(monos), key=lambda m: m.degree)
    kept: list[Monomial] = []
    for m in candidates:
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return MonomialIdeal(n, kept)


def min_gen_degree(I: MonomialIdeal) -> int:
    return min(g.degree for g in I.gens)


def max_gen_degree(I: MonomialIdeal) -> int:
    return max(g.degree for g in I.gens)


def gens_of_degree(I: MonomialIdeal, d: int) -> tuple[Monomial, ...]:
    return tuple(g for g in I.gens if g.degree == d)


@lru_cache(maxsize=8192)
def _members(I: MonomialIdeal, d: int) -> frozenset:
    """Exponent tuples of the degree-d monomials lying in I.

    Computed by the shadow recurrence I_d = (x_1..x_n) * I_{d-1} plus
    the degree-d generators; exponent tuples rather than Monomial
    objects keep the inner loop cheap.
    """
    if d < min_gen_degree(I):
        return frozenset()
    n = I.n
    out = set()
    for t in _members(I, d - 1):
        for i in range(n):
            out.add(t[:i] + (t[i] + 1,) + t[i + 1 :])
    out.update(g.exponents for g in I.gens if g.degree == d)
    return frozenset(out)


def contains(I: Ideal, u: Monomial) -> bool:
    """Membership test for a monomial."""
    if isinstance(I, UnitIdeal):
        return True
    if isinstance(I, ZeroIdeal):
        return False
    if u.nvars != I.n:
        raise ValueError(f"{u!r} does not live in {I.n} variables")
    if u.degree < min_gen_degree(I):
        return False
    return u.exponents in _members(I, u.degree)


def hilbert_value(I: Ideal, d: int) -> int:
    """dim_k of the degree-d graded piece of I."""
    if d < 0:
        return 0
    if isinstance(I, UnitIdeal):
        return len(monomials_of_degree(I.n, d))
    if isinstance(I, ZeroIdeal):
        return 0
    if d < min_gen_degree(I):
        return 0
    return len(_members(I, d))


def monomials_at_degree(I: Ideal, d: int) -> tuple[Monomial, ...]:
    """The degree-d monomials of I, glex-descending."""
    if isinstance(I, UnitIdeal):
        return monomials_of_degree(I.n, d)
    if isinstance(I, ZeroIdeal):
        return ()
    if d < min_gen_degree(I):
        return ()
    mem = _members(I, d)
    return tuple(u for u in monomials_of_degree(I.n, d) if u.exponents in mem)


def is_lex_segment(I: Ideal) -> bool:
    """True iff every graded piece of I is an initial glex segment.

    Checking degrees G_min..G_max suffices: below G_min the piece is
    empty, and the shadow of an initial segment is an initial segment,
    so lexness propagates upward once all generators are present.
    """
    if isinstance(I, (UnitIdeal, ZeroIdeal)):
        return True
    for d in range(min_gen_degree(I), max_gen_degree(I) + 1):
        mem = _members(I, d)
        master = monomials_of_degree(I.n, d)
        if mem != frozenset(u.exponents for u in master[: len(mem)]):
            return False
    return True


def stable_violation(I: MonomialIdeal):
    """First witness that I is not stable, or None.

    Stability: for every generator u and every i < m(u), the exchange
    monomial x_i * u / x_{m(u)} lies in I.  Returns (u, i, exchange)
    for the first failure in glex order.
    """
    for g in I.gens:
        m = max_index(g)
        for i in range(1, m):
            v = mul_var(div_var(g, m), i)
            if not contains(I, v):
                return (g, i, v)
    return None


def is_stable(I: MonomialIdeal) -> bool:
    return stable_violation(I) is None


def is_artinian(I: Ideal) -> bool:
    """True iff I contains a pure power of every variable."""
    if isinstance(I, UnitIdeal):
        return True
    if isinstance(I, ZeroIdeal):
        return False
    for i in range(I.n):
        if not any(g.exponents[i] == g.degree for g in I.gens):
            return False
    return True


def colon_variable(I: MonomialIdeal, i: int):
    """The colon ideal (I : x_i).

    For monomial ideals this is generated by u/x_i for the generators
    divisible by x_i, together with the rest unchanged.  Returns
    UnitIdeal when x_i itself is a generator.
    """
    quotients = []
    for g in I.gens:
        if g.exponents[i - 1] > 0:
            quotients.append(div_var(g, i))
        else:
            quotients.append(g)
    return minimalize(quotients, I.n)


def add_variable(I: MonomialIdeal, i: int):
    """The sum I + (x_i)."""
    return minimalize(list(I.gens) + [variable(i, I.n)], I.n)


def split_x(L: MonomialIdeal) -> Split:
    """Split a lex-segment ideal as L = x_1 * (L : x_1) + J.

    J collects the x_1-free generators, living in the last n-1
    variables.  The minimal generators of L are recovered exactly as
    x_1 * G(L : x_1) together with G(J); this identity is asserted.
    """
    if L.n < 2:
        raise ValueError("splitting needs at least two variables")
    if not is_lex_segment(L):
        raise ValueError("split_x requires a lex-segment ideal")
    colon = colon_variable(L, 1)
    projected = [
        Monomial(g.exponents[1:]) for g in L.gens if g.exponents[0] == 0
    ]
    if projected:
        xfree = minimalize(projected, L.n - 1)
    else:
        xfree = ZeroIdeal(L.n - 1)
    rebuilt = set()
    if isinstance(colon, UnitIdeal):
        rebuilt.add(variable(1, L.n))
    else:
        rebuilt.update(mul_var(g, 1) for g in colon.gens)
    if isinstance(xfree, MonomialIdeal):
        rebuilt.update(Monomial((0,) + g.exponents) for g in xfree.gens)
    assert rebuilt == set(L.gens), (
        f"splitting failed to reconstruct generators: {rebuilt} vs {set(L.gens)}"
    )
    return Split(colon, xfree)


@lru_cache(maxsize=None)
def segment_shadow_size(n: int, d: int, t: int) -> int:
    """Size of the shadow of the first t degree-d monomials in n vars."""
    seg = monomials_of_degree(n, d)[:t]
    out = set()
    for u in seg:
        e = u.exponents
        for i in range(n):
            out.add(e[:i] + (e[i] + 1,) + e[i + 1 :])
    return len(out)


_LEXIFY_DEGREE_CAP = 512


def lexify(I: MonomialIdeal) -> MonomialIdeal:
    """The lex-segment ideal with the same Hilbert function as I.

    Degree d contributes the initial segment of size hilbert_value(I, d).
    New generators can appear above max_gen_degree(I); the scan stops at
    the first degree B where the segment's shadow already accounts for
    the next Hilbert value, after which no further generators occur.
    Fixed point on lex-segment input.
    """
    n = I.n
    B = max_gen_degree(I)
    while True:
        t = hilbert_value(I, B)
        if segment_shadow_size(n, B, t) == hilbert_value(I, B + 1):
            break
        B += 1
        if B > _LEXIFY_DEGREE_CAP:
            raise RuntimeError("lexification did not stabilize")
    gens: list[Monomial] = []
    prev_shadow = 0
    for d in range(1, B + 1):
        t = hilbert_value(I, d)
        if t < prev_shadow:
            # Cannot happen for an actual Hilbert function of an ideal.
            raise RuntimeError("Hilbert values shrink below the shadow bound")
        gens.extend(monomials_of_degree(n, d)[prev_shadow:t])
        prev_shadow = segment_shadow_size(n, d, t)
    return minimalize(gens, n)


def format_ideal(I: Ideal) -> str:
    """Render an ideal as a parenthesized generator list."""
    if isinstance(I, UnitIdeal):
        return "(1)"
    if isinstance(I, ZeroIdeal):
        return "(0)"
    return "(" + ", ".join(format_monomial(g) for g in I.gens) + ")"
