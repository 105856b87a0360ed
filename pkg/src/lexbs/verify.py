"""Executable checks tying the machinery together.

Each check takes an ideal and returns a CheckReport with a hypothesis
status (applicable / excluded(reason) / vacuous(reason)), a verdict
(pass / fail plus a concrete witness on failure), and enough detail to
reproduce the comparison by hand.  The checks:

- check_colon_prefix: the full-length summands of the chain of
  (L : x_1), shifted by +1, open the chain of L, with equal
  coefficients except possibly a larger final one.
- check_tail_agreement: the short summands of the chains of L and
  (L, x_1) coincide.
- check_excluded_family_tails: the same tail comparison on the family
  x*(x, y, z^t) + J that the previous check excludes.
- family_closed_form: the predicted chain of x*(x, y, z^(t-1)) + (y,z)^s.
- explain_chain: tags each summand of L's chain with the colon ideals
  or (L, x_1) whose chains induce it.
- check_lex_dominance: Betti numbers never drop under lexification.
- check_split_identities: structural facts about the splitting
  L = x_1*(L : x_1) + J used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .betti import ek_betti, mapping_cone_betti
from .decompose import Decomposition, bs_decompose, length_filter
from .ideal import (
    MonomialIdeal,
    UnitIdeal,
    ZeroIdeal,
    add_variable,
    colon_variable,
    contains,
    format_ideal,
    is_artinian,
    is_lex_segment,
    is_stable,
    lexify,
    max_gen_degree,
    min_gen_degree,
    minimalize,
    split_x,
)
from .monomial import Monomial, variable
from .pure import pure_diagram


@dataclass
class CheckReport:
    """Outcome of one check on one ideal."""

    ideal: Union[MonomialIdeal, UnitIdeal, ZeroIdeal]
    status: str
    verdict: Optional[str] = None
    witness: Optional[str] = None
    details: dict = field(default_factory=dict)

    @property
    def status_kind(self) -> str:
        """The status without its parenthesized reason."""
        return self.status.split("(", 1)[0]

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"


@lru_cache(maxsize=8192)
def chain_of(I: MonomialIdeal) -> Decomposition:
    """Greedy chain of the ideal's Betti diagram (cached)."""
    return bs_decompose(ek_betti(I))


def _shift_seq(seq: tuple[int, ...], by: int = 1) -> tuple[int, ...]:
    return tuple(d + by for d in seq)


def check_colon_prefix(L: MonomialIdeal) -> CheckReport:
    """Shifted-prefix law for the chain of an Artinian lex ideal.

    Write A = (L : x_1).  The full-length summands of A's chain, with
    every degree raised by one, must open L's chain: same sequences,
    same coefficients except that the last one may grow.
    """
    if not is_lex_segment(L):
        return CheckReport(L, "excluded(not a lex-segment ideal)")
    if not is_artinian(L):
        return CheckReport(
            L, "excluded(no pure power of some variable: quotient not Artinian)"
        )
    colon = colon_variable(L, 1)
    if isinstance(colon, UnitIdeal):
        return CheckReport(L, "vacuous(colon by x_1 is the unit ideal)")
    n = L.n
    dec_colon = chain_of(colon)
    dec_L = chain_of(L)
    full_colon = length_filter(dec_colon, n, "exactly")
    full_L = length_filter(dec_L, n, "exactly")
    expected = tuple(
        (coeff, _shift_seq(seq)) for coeff, seq in full_colon.summands
    )
    t1 = len(expected)
    actual = full_L.summands[:t1]
    details = {
        "prefix_length": t1,
        "colon": colon,
        "colon_chain": dec_colon,
        "ideal_chain": dec_L,
        "shifted_prefix": expected,
        "ideal_prefix": actual,
    }
    if len(full_L.summands) < t1:
        return CheckReport(
            L,
            "applicable",
            "fail",
            f"chain has {len(full_L.summands)} full-length summands, "
            f"need at least {t1}",
            details,
        )
    for k in range(t1):
        if actual[k][1] != expected[k][1]:
            return CheckReport(
                L,
                "applicable",
                "fail",
                f"summand {k}: sequence {actual[k][1]} != shifted {expected[k][1]}",
                details,
            )
    for k in range(t1 - 1):
        if actual[k][0] != expected[k][0]:
            return CheckReport(
                L,
                "applicable",
                "fail",
                f"summand {k}: coefficient {actual[k][0]} != {expected[k][0]}",
                details,
            )
    if actual[t1 - 1][0] < expected[t1 - 1][0]:
        return CheckReport(
            L,
            "applicable",
            "fail",
            f"summand {t1 - 1}: coefficient {actual[t1 - 1][0]} < "
            f"{expected[t1 - 1][0]}",
            details,
        )
    return CheckReport(L, "applicable", "pass", None, details)


def _compare_tails(tail_a, tail_b) -> Optional[str]:
    """First difference between two summand lists, or None if equal."""
    if len(tail_a) != len(tail_b):
        return f"tail lengths differ: {len(tail_a)} vs {len(tail_b)}"
    for k, (a, b) in enumerate(zip(tail_a, tail_b)):
        if a != b:
            return f"tail position {k}: {a} vs {b}"
    return None


def _tail_report(L: MonomialIdeal, status: str) -> CheckReport:
    """Shared tail comparison between the chains of L and (L, x_1)."""
    n = L.n
    Lx = add_variable(L, 1)
    tail_L = length_filter(chain_of(L), n, "less-than").summands
    tail_Lx = length_filter(chain_of(Lx), n, "less-than").summands
    details = {"tail": tail_L, "augmented_tail": tail_Lx, "augmented": Lx}
    diff = _compare_tails(tail_L, tail_Lx)
    if diff is None:
        return CheckReport(L, status, "pass", None, details)
    return CheckReport(L, status, "fail", diff, details)


def classify_excluded_family(L: MonomialIdeal):
    """Decide membership in the family x*(x, y, z^t) + J, J not a power.

    Returns the pair (t, k) with k the least generator degree of J when
    L belongs to the family with 1 < t < k-1, and otherwise a human
    readable reason why not.  Assumes L is an Artinian lex ideal.
    """
    if L.n != 3:
        return "not a 3-variable ideal"
    if contains(L, variable(1, 3)):
        return "x is a generator, so the colon by x is the unit ideal"
    colon, xfree = split_x(L)
    if isinstance(colon, UnitIdeal) or isinstance(xfree, ZeroIdeal):
        return "splitting is degenerate"
    shape = sorted(colon.gens, key=lambda g: g.exponents, reverse=True)
    x1, x2 = variable(1, 3), variable(2, 3)
    is_z_power = (
        len(shape) == 3
        and shape[0] == x1
        and shape[1] == x2
        and shape[2].exponents[2] == shape[2].degree
    )
    if not is_z_power:
        return (
            f"colon by x is {format_ideal(colon)}, "
            "not of the form (x, y, z^t)"
        )
    t = shape[2].degree
    k = min_gen_degree(xfree)
    if len(xfree.gens) == k + 1 and all(g.degree == k for g in xfree.gens):
        return f"J is the full power (y, z)^{k}"
    if not 1 < t < k - 1:
        return f"t = {t} is outside 1 < t < k-1 = {k - 1}"
    return (t, k)


def check_tail_agreement(L: MonomialIdeal) -> CheckReport:
    """Shared-tail law: short summands of L and (L, x_1) coincide.

    The family x*(x, y, z^t) + J with J not a full power and
    1 < t < k-1 is outside the hypothesis; such ideals are reported
    excluded but the comparison is still evaluated and recorded.
    """
    if not is_lex_segment(L):
        return CheckReport(L, "excluded(not a lex-segment ideal)")
    if not is_artinian(L):
        return CheckReport(L, "vacuous(quotient not Artinian)")
    if contains(L, variable(1, L.n)):
        # (L, x_1) = L, so the two tails are the same list.
        return _tail_report(
            L, "vacuous(L already contains x_1, so L = (L, x_1))"
        )
    family = classify_excluded_family(L) if L.n == 3 else "not 3 variables"
    if isinstance(family, tuple):
        t, k = family
        status = f"excluded(family x*(x, y, z^{t}) + J with k = {k})"
    else:
        status = "applicable"
    return _tail_report(L, status)


def check_excluded_family_tails(L: MonomialIdeal) -> CheckReport:
    """Tail agreement on the family the previous check excludes."""
    if not is_lex_segment(L):
        return CheckReport(L, "excluded(wrong-family: not a lex-segment ideal)")
    if not is_artinian(L):
        return CheckReport(L, "excluded(wrong-family: quotient not Artinian)")
    family = classify_excluded_family(L)
    if not isinstance(family, tuple):
        return CheckReport(L, f"excluded(wrong-family: {family})")
    return _tail_report(L, "applicable")


def family_ideal(t: int, s: int) -> MonomialIdeal:
    """The ideal x*(x, y, z^(t-1)) + (y, z)^s for 1 <= t <= s-1, s >= 2.

    At t = 1 the first factor collapses to (x).  These are Artinian lex
    ideals for every admissible (t, s).
    """
    if s < 2 or not 1 <= t <= s - 1:
        raise ValueError(f"need s >= 2 and 1 <= t <= s-1, got t={t}, s={s}")
    if t == 1:
        head = [variable(1, 3)]
    else:
        head = [
            Monomial((2, 0, 0)),
            Monomial((1, 1, 0)),
            Monomial((1, 0, t - 1)),
        ]
    tail = [Monomial((0, s - i, i)) for i in range(s + 1)]
    return minimalize(head + tail, 3)


def family_closed_form(t: int, s: int) -> Decomposition:
    """Predicted greedy chain for family_ideal(t, s).

    Assembled from (coefficient, degree sequence, display scale)
    triples; each display scale is converted to the canonical integral
    normalization of pure_diagram.  Sequences that degenerate (fail to
    strictly increase) at small t are dropped, zero coefficients are
    dropped, and adjacent equal sequences merge; at t = 2 two such
    merges occur and at t = 1 only three summands survive.
    """
    if s < 2 or not 1 <= t <= s - 1:
        raise ValueError(f"need s >= 2 and 1 <= t <= s-1, got t={t}, s={s}")
    raw = (
        (Fraction(1, t), (2, 3, t + 2), t * (t - 1)),
        (Fraction(1, t), (2, t + 1, t + 2), t * (t - 1)),
        (Fraction(1, s), (2, t + 1, s + 2), s * (t - 1) * (s - t + 1)),
        (Fraction(t - 1, s), (2, s + 1, s + 2), s * (s - 1)),
        (Fraction(1), (t, s + 1, s + 2), (s + 1 - t) * (s + 2 - t)),
        (Fraction(s), (s, s + 1), 1),
        (Fraction(1), (s,), 1),
    )
    out: list[tuple[Fraction, tuple[int, ...]]] = []
    for coeff, seq, scale in raw:
        if any(a >= b for a, b in zip(seq, seq[1:])):
            continue
        if coeff == 0:
            continue
        canonical = coeff * Fraction(scale, pure_diagram(seq).lam)
        if canonical == 0:
            continue
        if out and out[-1][1] == seq:
            out[-1] = (out[-1][0] + canonical, seq)
        else:
            out.append((canonical, seq))
    return Decomposition(tuple(out))


COLON_SOURCES = ("L:x", "L:y", "L:z")
AUGMENTED_SOURCE = "(L,x)"


@dataclass
class ProvenanceReport:
    """Chain of L with each summand tagged by its sources.

    Full-length summands are traced to the colon ideals L:x, L:y, L:z
    (a source matches when its chain contains the summand's sequence
    lowered by one); short summands are traced to (L, x).  Summands with
    no source are "extra".  `unused` lists source summands that induce
    nothing in L's chain.
    """

    ideal: MonomialIdeal
    tagged: tuple[tuple[Fraction, tuple[int, ...], tuple[str, ...]], ...]
    unused: tuple[tuple[str, tuple[int, ...]], ...]
    source_chains: dict

    def sources_of(self, seq: tuple[int, ...]) -> tuple[str, ...]:
        for _, s, srcs in self.tagged:
            if s == tuple(seq):
                return srcs
        raise KeyError(f"{seq} is not a summand of the chain")

    def extras(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s for _, s, srcs in self.tagged if not srcs)


def explain_chain(L: MonomialIdeal) -> ProvenanceReport:
    """Annotate the chain of an Artinian lex ideal in three variables."""
    if L.n != 3:
        raise ValueError("provenance annotation needs a 3-variable ideal")
    if not is_lex_segment(L):
        raise ValueError("provenance annotation needs a lex-segment ideal")
    if not is_artinian(L):
        raise ValueError("provenance annotation needs an Artinian quotient")
    source_chains: dict = {}
    for idx, name in enumerate(COLON_SOURCES, start=1):
        c = colon_variable(L, idx)
        source_chains[name] = (
            () if isinstance(c, UnitIdeal) else chain_of(c).summands
        )
    Lx = add_variable(L, 1)
    source_chains[AUGMENTED_SOURCE] = chain_of(Lx).summands
    dec = chain_of(L)

    full_seqs = {
        name: {seq for _, seq in ch if len(seq) == 3}
        for name, ch in source_chains.items()
        if name != AUGMENTED_SOURCE
    }
    short_lx = tuple(
        seq for _, seq in source_chains[AUGMENTED_SOURCE] if len(seq) < 3
    )
    short_lx_set = set(short_lx)

    tagged = []
    own_full = set()
    own_short = set()
    for coeff, seq in dec.summands:
        if len(seq) == 3:
            own_full.add(seq)
            lowered = _shift_seq(seq, -1)
            srcs = tuple(
                name for name in COLON_SOURCES if lowered in full_seqs[name]
            )
        else:
            own_short.add(seq)
            srcs = (AUGMENTED_SOURCE,) if seq in short_lx_set else ()
        tagged.append((coeff, seq, srcs))

    unused = []
    for name in COLON_SOURCES:
        for _, seq in source_chains[name]:
            if len(seq) == 3 and _shift_seq(seq) not in own_full:
                unused.append((name, seq))
    for seq in short_lx:
        if seq not in own_short:
            unused.append((AUGMENTED_SOURCE, seq))
    return ProvenanceReport(L, tuple(tagged), tuple(unused), source_chains)


def check_cone_assembly(L: MonomialIdeal) -> CheckReport:
    """EK diagram of L equals the mapping-cone assembly of its pieces.

    Needs both split pieces to be proper: the colon not the unit ideal
    and at least one x_1-free generator.
    """
    if not is_lex_segment(L):
        return CheckReport(L, "vacuous(not a lex-segment ideal)")
    colon, xfree = split_x(L)
    if isinstance(colon, UnitIdeal):
        return CheckReport(L, "vacuous(colon by x_1 is the unit ideal)")
    if isinstance(xfree, ZeroIdeal):
        return CheckReport(L, "vacuous(no x_1-free generators)")
    cone = mapping_cone_betti(ek_betti(colon), ek_betti(xfree))
    direct = ek_betti(L)
    details = {"cone": cone, "direct": direct}
    if cone == direct:
        return CheckReport(L, "applicable", "pass", None, details)
    keys = sorted(set(cone.entries) | set(direct.entries))
    for key in keys:
        if cone.entries.get(key, 0) != direct.entries.get(key, 0):
            i, j = key
            return CheckReport(
                L,
                "applicable",
                "fail",
                f"beta_({i},{j}): cone gives {cone.get(i, j)}, "
                f"direct formula gives {direct.get(i, j)}",
                details,
            )
    return CheckReport(L, "applicable", "fail", "diagrams differ", details)


def check_lex_dominance(I: MonomialIdeal) -> CheckReport:
    """Betti numbers of a stable ideal never exceed its lexification's."""
    if not is_stable(I):
        return CheckReport(
            I, "vacuous(not stable: the Betti formula does not apply)"
        )
    lex = lexify(I)
    B = ek_betti(I)
    B_lex = ek_betti(lex)
    details = {"lexification": lex, "equal": B == B_lex}
    for (i, j), v in sorted(B.items()):
        w = B_lex.get(i, j)
        if v > w:
            return CheckReport(
                I,
                "applicable",
                "fail",
                f"beta_({i},{j}) = {v} exceeds lexification's {w}",
                details,
            )
    return CheckReport(I, "applicable", "pass", None, details)


def check_split_identities(L: MonomialIdeal) -> CheckReport:
    """Structural facts about L = x_1*(L : x_1) + J for lex L.

    Checks, with a failure witness per item: every colon (L : x_i) is
    lex or the unit ideal; L is stable; the splitting reconstructs the
    generators; J is lex over the smaller ring; the degree gap
    min degree of J >= max degree of (L : x_1) + 1; the generator-count
    identities on J's Betti numbers in two variables.
    """
    if not is_lex_segment(L):
        return CheckReport(L, "vacuous(not a lex-segment ideal)")
    failures: list[str] = []
    n = L.n
    for i in range(1, n + 1):
        c = colon_variable(L, i)
        if not (isinstance(c, UnitIdeal) or is_lex_segment(c)):
            failures.append(
                f"(L : x_{i}) = {format_ideal(c)} is not a lex segment"
            )
    if not is_stable(L):
        failures.append("lex-segment ideal is not stable")
    try:
        colon, xfree = split_x(L)
    except AssertionError as exc:
        failures.append(str(exc))
        colon = xfree = None
    if colon is not None:
        if (
            min_gen_degree(L) >= 2
            and isinstance(colon, MonomialIdeal)
            and min_gen_degree(colon) != min_gen_degree(L) - 1
        ):
            failures.append(
                f"least generator degree {min_gen_degree(L)} does not drop "
                f"by one in the colon ({min_gen_degree(colon)})"
            )
        if isinstance(xfree, MonomialIdeal):
            if not is_lex_segment(xfree):
                failures.append(
                    f"J = {format_ideal(xfree)} is not a lex segment over "
                    "the smaller ring"
                )
            if isinstance(colon, MonomialIdeal):
                gap_lo = min_gen_degree(xfree)
                gap_hi = max_gen_degree(colon)
                if gap_lo < gap_hi + 1:
                    failures.append(
                        f"degree gap fails: least degree {gap_lo} of J is "
                        f"not above max degree {gap_hi} of the colon"
                    )
            if xfree.n == 2:
                failures.extend(_two_variable_column_identities(xfree))
    details = {"failures": tuple(failures)}
    if failures:
        return CheckReport(L, "applicable", "fail", "; ".join(failures), details)
    return CheckReport(L, "applicable", "pass", None, details)


def _two_variable_column_identities(J: MonomialIdeal) -> list[str]:
    """Betti identities of a lex ideal in two variables.

    With k the least generator degree: c_{0,k} = c_{1,k+1} + 1, and
    c_{0,j} = c_{1,j+1} for every j > k (only the pure power of the
    first variable has m(u) = 1).  When the degree-k piece is full
    (c_{0,k} = k+1), the ideal is the whole power, so c_{1,k+1} = k and
    nothing lives above degree k.
    """
    c = ek_betti(J)
    k = min_gen_degree(J)
    problems = []
    if c.get(0, k) != c.get(1, k + 1) + 1:
        problems.append(
            f"c_(0,{k}) = {c.get(0, k)} != c_(1,{k + 1}) + 1 "
            f"= {c.get(1, k + 1) + 1}"
        )
    for j in range(k + 1, max_gen_degree(J) + 1):
        if c.get(0, j) != c.get(1, j + 1):
            problems.append(
                f"c_(0,{j}) = {c.get(0, j)} != c_(1,{j + 1}) = {c.get(1, j + 1)}"
            )
    if c.get(0, k) == k + 1:
        if c.get(1, k + 1) != k:
            problems.append(
                f"full degree-{k} piece but c_(1,{k + 1}) = {c.get(1, k + 1)} != {k}"
            )
        above = [
            (i, j) for (i, j), _ in c.items() if j - i > k
        ]
        if above:
            problems.append(
                f"full degree-{k} piece but entries persist at {sorted(above)}"
            )
    return problems
