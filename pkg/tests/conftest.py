"""Shared worked examples.

Three showcase ideals exercise every code path:

- splice8: x*(x, y^2, yz, z^2) + (y, z)^8 -- a full power spliced onto
  a small quadric block, so the chain has a long degree jump.
- stagger: generators staggered over degrees 2..9, giving a ten-summand
  chain with three short summands.
- family26: a member of the family x*(x, y, z^t) + J (t = 2, least
  J-degree 6) whose chain picks up a summand with no source.

The expected chains and diagrams were computed by hand with the
binomial formula and the greedy algorithm and are frozen here.
"""

from fractions import Fraction as F

from lexbs.cli import parse_ideal
from lexbs.monomial import Monomial


def m(*exps):
    return Monomial(exps)


SPLICE8_TEXT = (
    "x^2, xy^2, xyz, xz^2, y^8, y^7z, y^6z^2, y^5z^3, y^4z^4, "
    "y^3z^5, y^2z^6, yz^7, z^8"
)
STAGGER_TEXT = "x^2, xy^2, xyz, xz^2, y^4, y^3z, y^2z^2, yz^6, z^9"
FAMILY26_TEXT = "x^2, xy, xz^2, y^6, y^5z, y^4z^3, y^3z^4, y^2z^5, yz^6, z^9"


def splice8():
    return parse_ideal(SPLICE8_TEXT)


def stagger():
    return parse_ideal(STAGGER_TEXT)


def family26():
    return parse_ideal(FAMILY26_TEXT)


SPLICE8_BETTI = {
    (0, 2): 1,
    (0, 3): 3,
    (1, 4): 5,
    (2, 5): 2,
    (0, 8): 9,
    (1, 9): 17,
    (2, 10): 8,
}

SPLICE8_CHAIN = (
    (F(1), (2, 4, 5)),
    (F(2, 7), (3, 4, 10)),
    (F(9, 7), (3, 9, 10)),
    (F(8), (8, 9)),
    (F(1), (8,)),
)

SPLICE8_COLON_X_CHAIN = (
    (F(1), (1, 3, 4)),
    (F(2), (2, 3)),
    (F(1), (2,)),
)

SPLICE8_COLON_Y_CHAIN = (
    (F(1), (2, 3, 4)),
    (F(1, 7), (2, 3, 9)),
    (F(8, 7), (2, 8, 9)),
    (F(7), (7, 8)),
    (F(1), (7,)),
)

SPLICE8_AUGMENTED_CHAIN = (
    (F(1), (1, 9, 10)),
    (F(8), (8, 9)),
    (F(1), (8,)),
)

STAGGER_BETTI = {
    (0, 2): 1,
    (0, 3): 3,
    (0, 4): 3,
    (0, 7): 1,
    (0, 9): 1,
    (1, 4): 5,
    (1, 5): 5,
    (1, 8): 2,
    (1, 10): 2,
    (2, 5): 2,
    (2, 6): 2,
    (2, 9): 1,
    (2, 11): 1,
}

STAGGER_CHAIN = (
    (F(1), (2, 4, 5)),
    (F(2, 3), (3, 4, 6)),
    (F(2, 3), (3, 5, 6)),
    (F(1, 2), (3, 5, 9)),
    (F(3, 10), (4, 5, 9)),
    (F(1, 20), (4, 8, 9)),
    (F(1, 4), (4, 8, 11)),
    (F(1), (4, 10)),
    (F(1), (7, 10)),
    (F(1), (9,)),
)

STAGGER_TAIL = ((F(1), (4, 10)), (F(1), (7, 10)), (F(1), (9,)))

FAMILY26_BETTI = {
    (0, 2): 2,
    (0, 3): 1,
    (0, 6): 2,
    (0, 7): 4,
    (0, 9): 1,
    (1, 3): 1,
    (1, 4): 2,
    (1, 7): 3,
    (1, 8): 8,
    (1, 10): 2,
    (2, 5): 1,
    (2, 8): 1,
    (2, 9): 4,
    (2, 11): 1,
}

FAMILY26_CHAIN = (
    (F(1, 3), (2, 3, 5)),
    (F(1, 3), (2, 4, 5)),
    (F(1, 3), (2, 4, 8)),
    (F(2, 15), (2, 7, 8)),
    (F(1, 10), (2, 7, 9)),
    (F(1, 2), (3, 7, 9)),
    (F(1, 2), (3, 8, 9)),
    (F(1, 2), (6, 8, 11)),
    (F(1, 2), (6, 8)),
    (F(2), (7, 8)),
    (F(2), (7, 10)),
    (F(1), (9,)),
)

FAMILY26_TAIL = (
    (F(1, 2), (6, 8)),
    (F(2), (7, 8)),
    (F(2), (7, 10)),
    (F(1), (9,)),
)

# A thirteen-summand variant of the family26 chain: the first nine
# summands, then the four tail summands repeated with every degree
# raised by one.  Kept for the acceptance test; it does not reconstruct
# the diagram (the true chain is FAMILY26_CHAIN).
FAMILY26_THIRTEEN = FAMILY26_CHAIN[:9] + (
    (F(1, 2), (7, 9)),
    (F(2), (8, 9)),
    (F(2), (8, 11)),
    (F(1), (10,)),
)

QUADRIC_TEXT = "x^2, xy, xz, y^2"

QUADRIC_QUOTIENT_CHAIN = (
    (F(1, 3), (0, 2, 3, 4)),
    (F(2, 3), (0, 2, 3)),
)

QUADRIC_QUOTIENT_UNIT = (
    (F(8), (0, 2, 3, 4)),
    (F(4), (0, 2, 3)),
)
