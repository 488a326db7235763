"""Bundled reference data for the three published example webs.

This module freezes, verbatim, what the published source states about its
three concrete examples: the defining matrices, the closed-form equations
as printed, the claimed values of the left determinant form, and the
claimed parameter-family memberships.  The audit machinery compares these
against derived quantities; nothing here is ever used as an input to a
derivation.
"""

from __future__ import annotations

__all__ = [
    "EXAMPLE_KEYS",
    "EXAMPLE_MATRICES",
    "CLAIMED_LEFT_DET",
    "PRINTED_CLOSED_FORMS",
    "CLAIMED_FAMILY",
]

EXAMPLE_KEYS = (1, 2, 3)

EXAMPLE_MATRICES = {
    1: ((1, 1, 0), (1, 1, 1), (1, 2, 1)),
    2: ((1, 1, 0), (0, 1, 1), (1, 1, 1)),
    3: ((1, 1, 0), (0, 1, 1), (1, 0, 1)),
}

#: Claimed value of the left determinant form on each example.
CLAIMED_LEFT_DET = {1: 2, 2: 1, 3: -1}

#: Closed-form equations exactly as printed: row a of "x" holds the stated
#: coefficients of x^{3+a} over (x1, x2, x3), row a of "y" those of y_{3+a}
#: over (y1, y2, y3).
PRINTED_CLOSED_FORMS = {
    1: {
        "x": ((1, 1, 1), (1, 1, 2), (0, 1, 1)),
        "y": ((-1, -1, 1), (0, 1, -1), (1, -1, 0)),
    },
    2: {
        "x": ((1, 0, 1), (1, 1, 0), (0, 1, 1)),
        "y": ((0, 1, -1), (-1, -1, 1), (-1, 0, 1)),
    },
    3: {
        "x": ((1, 0, 1), (1, 1, 0), (0, 1, 1)),
        "y": (("-1/2", "1/2", "1/2"), ("-1/2", "-1/2", "1/2"), ("1/2", "-1/2", "-1/2")),
    },
}

#: Which named parameter subfamily each example is said to belong to.
CLAIMED_FAMILY = {1: "B8", 2: "B7", 3: "B6"}
