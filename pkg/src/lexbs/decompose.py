"""Greedy chain decomposition of Betti diagrams into pure diagrams.

Peel off the top pure diagram with the largest multiplier that keeps
every entry nonnegative; repeat on the remainder.  All arithmetic is
exact (Fraction), so reconstruction from the summands is an identity,
not an approximation.  The degree sequences encountered form a
descending chain in the seq_leq order, with lengths non-increasing, so
full-length summands form a contiguous prefix and shorter ones a
contiguous suffix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .betti import BettiDiagram
from .pure import NotDecomposable, pure_diagram, top_degree_sequence


@dataclass(frozen=True)
class Decomposition:
    """Ordered summands (coefficient, degree sequence) of a greedy chain."""

    summands: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def sequences(self) -> tuple[tuple[int, ...], ...]:
        return tuple(seq for _, seq in self.summands)

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)


@dataclass(frozen=True)
class SummandSlice:
    """A length-filtered view of a decomposition's summands."""

    summands: tuple[tuple[Fraction, tuple[int, ...]], ...]
    is_prefix: bool
    is_suffix: bool


def bs_decompose(B: BettiDiagram) -> Decomposition:
    """Greedy decomposition of a nonzero diagram into pure diagrams.

    Each step subtracts alpha * pi(d) where d is the top degree sequence
    of the remainder and alpha = min_i remainder[i, d_i] / entry_i; this
    zeroes at least one entry, so the step count is bounded by the number
    of nonzero entries.  Diagrams outside the cone surface as
    NotDecomposable, either through a malformed top sequence or through
    a negative entry after subtraction.
    """
    work = {key: Fraction(v) for key, v in B.items()}
    if not work:
        raise NotDecomposable("cannot decompose an empty diagram")
    summands: list[tuple[Fraction, tuple[int, ...]]] = []
    max_steps = len(work)
    for _ in range(max_steps):
        if not work:
            break
        remainder = BettiDiagram(B.n, work)
        seq = top_degree_sequence(remainder)
        pi = pure_diagram(seq)
        alpha = min(work[(i, d)] / e for (i, d), e in pi.items())
        if alpha <= 0:
            raise NotDecomposable(f"nonpositive multiplier at {seq}")
        for (i, d), e in pi.items():
            v = work[(i, d)] - alpha * e
            if v < 0:
                raise NotDecomposable(
                    f"entry ({i}, {d}) driven negative by pi{seq}"
                )
            if v == 0:
                del work[(i, d)]
            else:
                work[(i, d)] = v
        summands.append((alpha, seq))
    if work:
        raise NotDecomposable("greedy steps did not exhaust the diagram")
    return Decomposition(tuple(summands))


def reconstruct(D: Decomposition, n: int) -> BettiDiagram:
    """Sum the pure summands back into a diagram (exact)."""
    out: dict[tuple[int, int], Fraction] = {}
    for coeff, seq in D.summands:
        for (i, d), e in pure_diagram(seq).items():
            key = (i, d)
            out[key] = out.get(key, Fraction(0)) + coeff * e
    return BettiDiagram(n, out)


def length_filter(D: Decomposition, length: int, mode: str) -> SummandSlice:
    """Summands whose sequence length is exactly, or less than, `length`.

    Also reports whether the selected summands sit as a contiguous
    prefix / suffix of the chain, which the non-increasing length
    property guarantees for the two modes used downstream.
    """
    if mode == "exactly":
        pred = lambda k: k == length
    elif mode == "less-than":
        pred = lambda k: k < length
    else:
        raise ValueError(f"unknown mode {mode!r}")
    idx = [k for k, (_, seq) in enumerate(D.summands) if pred(len(seq))]
    picked = tuple(D.summands[k] for k in idx)
    total = len(D.summands)
    is_prefix = idx == list(range(len(idx)))
    is_suffix = idx == list(range(total - len(idx), total))
    return SummandSlice(picked, is_prefix, is_suffix)


def unit_normalized(D: Decomposition) -> tuple[tuple[Fraction, tuple[int, ...]], ...]:
    """Coefficients against pi(d)/lam instead of the integral pi(d).

    pi(d)/lam has entries 1/prod_{k != i}|d_i - d_k|, the normalization
    in which coefficients of quotient diagrams come out as pleasant
    integers surprisingly often; converting is just multiplying each
    coefficient by lam.
    """
    return tuple(
        (coeff * pure_diagram(seq).lam, seq) for coeff, seq in D.summands
    )
