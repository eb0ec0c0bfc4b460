"""Deterministic pass/fail certificates for identity checks."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactlin import Tensor

# bumped whenever a formula reading or the leg-placement rule changes
CONVENTION = "bidouble-conventions/1 (legs: first-written factor left; perm[i] = target slot)"


@dataclass(frozen=True)
class Certificate:
    """Result of evaluating one identity (or a named group of identities).

    ``status`` is ``"pass"`` exactly when ``failure_count == 0``.
    ``first_witness`` is the first failing basis-index tuple in lexicographic
    order and ``residual_sample`` the first nonzero residual coefficient there.
    """

    identity_name: str
    failure_count: int = 0
    first_witness: Optional[tuple] = None
    residual_sample: Fraction = Fraction(0)
    failing_identity: Optional[str] = None
    parts: tuple = ()
    notes: tuple = ()

    @property
    def status(self) -> str:
        return "pass" if self.failure_count == 0 else "fail"

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def __bool__(self):
        return self.passed

    def failed_parts(self) -> list:
        return [p for p in self.parts if not p.passed]

    def find(self, name: str) -> Optional["Certificate"]:
        """Depth-first search for a sub-certificate by name."""
        if self.identity_name == name:
            return self
        for p in self.parts:
            hit = p.find(name)
            if hit is not None:
                return hit
        return None

    def with_notes(self, *notes: str) -> "Certificate":
        return Certificate(self.identity_name, self.failure_count, self.first_witness,
                           self.residual_sample, self.failing_identity, self.parts,
                           self.notes + tuple(notes))

    def to_dict(self) -> dict:
        out = {
            "identity_name": self.identity_name,
            "status": self.status,
            "failure_count": self.failure_count,
            "first_witness": list(self.first_witness) if self.first_witness is not None else None,
            "residual_sample": str(self.residual_sample),
        }
        if self.failing_identity is not None:
            out["failing_identity"] = self.failing_identity
        if self.parts:
            out["parts"] = [p.to_dict() for p in self.parts]
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self) -> str:
        return json.dumps({"convention": CONVENTION, "certificate": self.to_dict()},
                          sort_keys=True, indent=2)


def from_residual(name: str, residual: Tensor, witness_axes: Optional[int] = None) -> Certificate:
    """Certificate for "residual is identically zero".

    The first ``witness_axes`` axes index the instance (basis tuple); the
    remaining axes are components of the residual value.  A failure is one
    instance with any nonzero component.
    """
    k = residual.ndim if witness_axes is None else witness_axes
    nz = residual.numerators != 0
    if k < residual.ndim:
        bad = nz.any(axis=tuple(range(k, residual.ndim)))
    else:
        bad = nz
    count = int(bad.sum()) if k else int(bool(bad))
    if count == 0:
        return Certificate(name)
    first = next(iter(residual.nonzero()))
    idx, val = first
    return Certificate(name, count, tuple(idx[:k]), val, failing_identity=name)


def from_bool(name: str, ok: bool, witness: Sequence[int] = (), sample=0) -> Certificate:
    if ok:
        return Certificate(name)
    return Certificate(name, 1, tuple(witness), Fraction(sample), failing_identity=name)


def combine(name: str, parts: Sequence[Certificate], notes: Sequence[str] = ()) -> Certificate:
    """Group certificates; the first failing part determines the witness."""
    parts = tuple(parts)
    total = sum(p.failure_count for p in parts)
    first = next((p for p in parts if not p.passed), None)
    if first is None:
        return Certificate(name, parts=parts, notes=tuple(notes))
    return Certificate(name, total, first.first_witness, first.residual_sample,
                       first.failing_identity or first.identity_name, parts, tuple(notes))
