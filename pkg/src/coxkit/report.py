"""Identity reports: one object per exact check, zero residual means holds."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one exact identity check: holds iff the residual is zero."""

    name: str
    lhs: object
    rhs: object
    residual: object
    holds: bool

    @staticmethod
    def compare(name: str, lhs, rhs) -> "IdentityReport":
        residual = lhs - rhs
        return IdentityReport(name, lhs, rhs, residual, residual.is_zero)

    @property
    def residual_terms(self) -> int:
        r = self.residual
        if hasattr(r, "items"):
            return len(r.items())
        if hasattr(r, "coeffs"):
            return sum(1 for c in r.coeffs if c)
        return 0 if self.holds else 1
