"""Parameter families, example webs, and seeded genericity surveys.

The named families fix zero entries of A (1-based positions):

    B8: A[1][3] = 0
    B7: A[1][2] = A[1][3] = 0
    B6: A[1][3] = A[2][1] = A[3][2] = 0

"generic" imposes no constraint.  Sampling draws uniform integers from a
box, forces the constrained entries to zero, and rejects singular draws.
Per-sample seeds are derived by hashing (root seed, index), so survey
results are independent of evaluation order and of the --jobs level.
"""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .abelian import relation_space
from .agw import AGW, INDETERMINATE, NOT_AGW, agw_test, literal_det
from .published import EXAMPLE_MATRICES
from .ratlin import RatMatrix
from .webmodel import LinearWeb, build_web, general_position_audit

__all__ = [
    "FAMILY_CONSTRAINTS",
    "FamilySpec",
    "SampleRecord",
    "SurveyStats",
    "example_web",
    "sample_matrix",
    "sample_family",
    "survey",
    "general_n_web",
    "derive_seed",
]

FAMILY_CONSTRAINTS = {
    "generic": (),
    "B8": ((1, 3),),
    "B7": ((1, 2), (1, 3)),
    "B6": ((1, 3), (2, 1), (3, 2)),
}

_SAMPLE_RETRIES = 1000


@dataclass(frozen=True)
class FamilySpec:
    """A sampling family: name, order, zero constraints, entry box."""

    name: str = "generic"
    n: int = 3
    entry_bound: int = 9

    def __post_init__(self):
        if self.name not in FAMILY_CONSTRAINTS:
            raise ValueError(f"unknown family {self.name!r}; "
                             f"expected one of {sorted(FAMILY_CONSTRAINTS)}")
        if self.name != "generic" and self.n != 3:
            raise ValueError(f"family {self.name} is defined for n = 3 only")
        if self.n < 1:
            raise ValueError("order must be at least 1")
        if self.entry_bound < 1:
            raise ValueError("entry bound must be at least 1")

    @property
    def constraints(self) -> tuple:
        return FAMILY_CONSTRAINTS[self.name]


def example_web(k: int) -> LinearWeb:
    """One of the three bundled reference webs (k in {1, 2, 3})."""
    if k not in EXAMPLE_MATRICES:
        raise ValueError(f"no example {k}; choose 1, 2 or 3")
    return build_web(RatMatrix(EXAMPLE_MATRICES[k]))


def derive_seed(root: int, *path: int) -> int:
    """Deterministic per-sample seed from a root seed and an index path."""
    text = "/".join(str(p) for p in (root, *path))
    digest = hashlib.sha256(text.encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


def sample_matrix(spec: FamilySpec, seed: int) -> RatMatrix:
    """Deterministic-for-seed nonsingular integer matrix satisfying the family."""
    rng = random.Random(seed)
    constrained = {(r - 1, c - 1) for r, c in spec.constraints}
    for _ in range(_SAMPLE_RETRIES):
        grid = [[0 if (i, j) in constrained
                 else rng.randint(-spec.entry_bound, spec.entry_bound)
                 for j in range(spec.n)] for i in range(spec.n)]
        A = RatMatrix(grid)
        if A.det() != 0:
            return A
    raise RuntimeError(f"no nonsingular sample found in {_SAMPLE_RETRIES} draws "
                       f"(family {spec.name}, bound {spec.entry_bound})")


def sample_family(spec: FamilySpec, seed: int) -> LinearWeb:
    return build_web(sample_matrix(spec, seed))


def general_n_web(A: RatMatrix) -> LinearWeb:
    """The same construction for an arbitrary order n (alias of build_web)."""
    return build_web(A)


@dataclass(frozen=True)
class SampleRecord:
    """Log line for one survey sample that needs attention downstream."""

    index: int
    relation_dimension: int
    audit_clean: bool
    agw_verdict: str

    def to_dict(self) -> dict:
        return {"index": self.index,
                "relation_dimension": self.relation_dimension,
                "audit_clean": self.audit_clean,
                "agw_verdict": self.agw_verdict}


@dataclass(frozen=True)
class SurveyStats:
    """Aggregated verdicts over a seeded family survey."""

    family: str
    n: int
    entry_bound: int
    samples: int
    seed: int
    not_agw: int
    agw: int
    indeterminate: int
    audit_clean: int
    relation_dim_histogram: dict
    left_det_zero: Optional[int]  # n = 3 only: samples with vanishing left form
    anomalies: tuple = field(default_factory=tuple)  # relation dim >= 2 records

    def to_dict(self) -> dict:
        out = {
            "family": self.family,
            "n": self.n,
            "entry_bound": self.entry_bound,
            "samples": self.samples,
            "seed": self.seed,
            "not_agw": self.not_agw,
            "agw": self.agw,
            "indeterminate": self.indeterminate,
            "audit_clean": self.audit_clean,
            "relation_dim_histogram": {str(k): v for k, v
                                       in sorted(self.relation_dim_histogram.items())},
            "anomalies": [a.to_dict() for a in self.anomalies],
        }
        if self.left_det_zero is not None:
            out["left_det_zero"] = self.left_det_zero
        return out

    def to_text(self) -> str:
        hist = ", ".join(f"dim {k}: {v}" for k, v
                         in sorted(self.relation_dim_histogram.items()))
        lines = [
            f"survey family={self.family} n={self.n} "
            f"box=[-{self.entry_bound},{self.entry_bound}] "
            f"samples={self.samples} seed={self.seed}",
            f"  verdicts: not-AGW {self.not_agw}, AGW {self.agw}, "
            f"indeterminate {self.indeterminate}",
            f"  audit clean: {self.audit_clean}",
            f"  relation dimensions: {hist}",
        ]
        if self.left_det_zero is not None:
            lines.append(f"  vanishing left determinant form: {self.left_det_zero}")
        for a in self.anomalies:
            lines.append(f"  anomaly sample {a.index}: relation dim "
                         f"{a.relation_dimension}, audit clean {a.audit_clean}, "
                         f"verdict {a.agw_verdict}")
        return "\n".join(lines)


def _survey_one(spec: FamilySpec, seed: int, index: int) -> dict:
    web = sample_family(spec, derive_seed(seed, index))
    agw_report = agw_test(web)
    audit = general_position_audit(web)
    rank = relation_space(web)
    left_zero = None
    if spec.n == 3:
        left_zero = literal_det(web, "left") == 0
    return {
        "index": index,
        "verdict": agw_report.verdict,
        "audit_clean": audit.general_position,
        "relation_dim": rank.dimension,
        "left_zero": left_zero,
    }


def survey(spec: FamilySpec, count: int, seed: int, jobs: int = 1) -> SurveyStats:
    """Run the verdict battery over seeded samples; deterministic for a seed.

    Results are aggregated in sample-index order regardless of ``jobs``.
    """
    if count <= 0:
        raise ValueError("sample count must be positive")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(
                lambda i: _survey_one(spec, seed, i), range(count)))
    else:
        results = [_survey_one(spec, seed, i) for i in range(count)]
    results.sort(key=lambda r: r["index"])

    counts = {NOT_AGW: 0, AGW: 0, INDETERMINATE: 0}
    audit_clean = 0
    histogram: dict = {}
    left_zero = 0 if spec.n == 3 else None
    anomalies = []
    for r in results:
        counts[r["verdict"]] += 1
        audit_clean += r["audit_clean"]
        histogram[r["relation_dim"]] = histogram.get(r["relation_dim"], 0) + 1
        if spec.n == 3 and r["left_zero"]:
            left_zero += 1
        if r["relation_dim"] >= 2:
            anomalies.append(SampleRecord(
                index=r["index"],
                relation_dimension=r["relation_dim"],
                audit_clean=r["audit_clean"],
                agw_verdict=r["verdict"]))
    return SurveyStats(
        family=spec.name,
        n=spec.n,
        entry_bound=spec.entry_bound,
        samples=count,
        seed=seed,
        not_agw=counts[NOT_AGW],
        agw=counts[AGW],
        indeterminate=counts[INDETERMINATE],
        audit_clean=audit_clean,
        relation_dim_histogram=histogram,
        left_det_zero=left_zero,
        anomalies=tuple(anomalies),
    )
