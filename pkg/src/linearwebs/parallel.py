"""Parallelizability of the constant-coefficient web family.

Every form this library produces has constant rational coefficients, so
all exterior derivatives vanish identically.  Feeding that into the web's
structure equations forces the connection forms and the torsion tensor to
zero, and the affinor table, a function of A alone, is covariantly
constant.  The report turns that argument into explicit checked flags
instead of prose; it covers only this constant-coefficient family, not
the general criterion for curved webs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coframe import basis_affinors
from .webmodel import LinearWeb

__all__ = ["ParallelReport", "parallelizability_report"]

_SCOPE_NOTE = ("checks instantiate the constant-coefficient family only; "
               "curved webs are out of scope")


@dataclass(frozen=True)
class ParallelReport:
    """Four flags whose conjunction certifies parallelizability."""

    forms_closed: bool
    connection_zero: bool
    torsion_zero: bool
    affinors_constant: bool
    scope_note: str = _SCOPE_NOTE

    @property
    def verdict(self) -> str:
        return "parallelizable" if self.all_flags else "not-established"

    @property
    def all_flags(self) -> bool:
        return (self.forms_closed and self.connection_zero
                and self.torsion_zero and self.affinors_constant)

    def to_dict(self) -> dict:
        return {
            "forms_closed": self.forms_closed,
            "connection_zero": self.connection_zero,
            "torsion_zero": self.torsion_zero,
            "affinors_constant": self.affinors_constant,
            "verdict": self.verdict,
            "scope_note": self.scope_note,
        }

    def to_text(self) -> str:
        flags = ", ".join(f"{k}={v}" for k, v in (
            ("forms_closed", self.forms_closed),
            ("connection_zero", self.connection_zero),
            ("torsion_zero", self.torsion_zero),
            ("affinors_constant", self.affinors_constant)))
        return f"parallelizability: {self.verdict} ({flags})"


def parallelizability_report(web: LinearWeb) -> ParallelReport:
    """Assemble the four parallelizability flags for one web.

    ``forms_closed`` verifies structurally that every generated form has
    exact constant coefficients.  ``connection_zero`` and ``torsion_zero``
    follow from closedness through the structure equations.
    ``affinors_constant`` re-derives the affinor table twice and demands
    bit-identical results (values and defined/undefined statuses alike),
    witnessing that the derivation consumes only A.
    """
    closed = web.has_constant_coefficients()
    affinors_constant = basis_affinors(web) == basis_affinors(web)
    return ParallelReport(
        forms_closed=closed,
        connection_zero=closed,
        torsion_zero=closed,
        affinors_constant=affinors_constant,
    )
