"""Pydantic models for the JSON encodings shared by the CLI and the HTTP server.

Encodings:
- Partition: array of row lengths, e.g. [2, 1]
- Tableau: array of rows, e.g. [[1, 3], [2]]
- SkewTableau: {"outer", "inner", "rows"} with null for boxes of the inner shape
- SignedYoungDiagram: array of sign strings, e.g. ["-+-+", "-+"]
- PartialPermutation: {"n", "word"}; `word` uses 0 for the kernel
"""

from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from .insertion import Bijection
from .orbits import ClassImage, ImageReport, OrbitRep
from .partial_perm import PartialPermutation
from .partitions import Partition
from .signed import SignedYoungDiagram
from .steinberg import Triple
from .sweeps import TableRow, VerifyResult
from .tableau import SkewTableau, Tableau

PartitionJSON = List[int]
TableauJSON = List[List[int]]
SignedJSON = List[str]
ShapePairJSON = List[PartitionJSON]


class WordRequest(BaseModel):
    """A partial permutation given by its word."""

    model_config = ConfigDict(extra="forbid")

    word: List[int] = Field(min_length=0)

    def to_domain(self) -> PartialPermutation:
        return PartialPermutation.from_word(self.word)


class PartialPermutationModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=0)
    word: List[int]

    @classmethod
    def from_domain(cls, tau: PartialPermutation) -> "PartialPermutationModel":
        return cls(n=tau.n, word=list(tau.word))

    def to_domain(self) -> PartialPermutation:
        return PartialPermutation(self.n, tuple(self.word))


class BijectionModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    sources: List[int]
    targets: List[int]

    @classmethod
    def from_domain(cls, w: Bijection) -> "BijectionModel":
        return cls(sources=list(w.sources), targets=list(w.targets))


class RSPairModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    P: TableauJSON
    Q: TableauJSON


class TripleModel(BaseModel):
    """(T1, T2, ν) for `triple` output and `untriple` input."""

    model_config = ConfigDict(extra="forbid")

    T1: TableauJSON
    T2: TableauJSON
    nu: PartitionJSON

    @classmethod
    def from_domain(cls, t: Triple) -> "TripleModel":
        return cls(T1=t.T1.as_lists(), T2=t.T2.as_lists(), nu=list(t.nu.parts))

    def to_domain(self) -> Triple:
        return Triple(T1=Tableau(self.T1), T2=Tableau(self.T2), nu=Partition(tuple(self.nu)))


class SkewTableauModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    outer: PartitionJSON
    inner: PartitionJSON
    rows: List[List[Optional[int]]]

    @classmethod
    def from_domain(cls, skew: SkewTableau) -> "SkewTableauModel":
        return cls(
            outer=list(skew.outer.parts),
            inner=list(skew.inner.parts),
            rows=skew.as_rows_with_gaps(),
        )


class TriangleRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    T1: TableauJSON
    T2: TableauJSON
    ells: List[int] = Field(default_factory=list)
    ms: List[int] = Field(default_factory=list)
    n: int = Field(ge=0)


class MatrixRequest(BaseModel):
    """Integer matrix, reduced mod the configured prime on use."""

    model_config = ConfigDict(extra="forbid")

    matrix: List[List[int]]


class OrbitRepModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=0)
    tau1: List[int]
    tau2: List[int]

    @classmethod
    def from_domain(cls, omega: OrbitRep) -> "OrbitRepModel":
        return cls(n=omega.n, tau1=list(omega.tau1.word), tau2=list(omega.tau2.word))

    def to_domain(self) -> OrbitRep:
        return OrbitRep(PartialPermutation(self.n, tuple(self.tau1)), PartialPermutation(self.n, tuple(self.tau2)))


class OrbitsResponse(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    count: int
    closed_count: int
    classes: List[OrbitRepModel]


class FiberEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    shapes: ShapePairJSON
    count: int
    formula: int


class FibersResponse(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    total: int
    fibers: List[FiberEntry]


class VerifyResultModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    target: str
    n: int
    checked: int
    ok: bool
    mismatches: List[str]

    @classmethod
    def from_domain(cls, result: VerifyResult) -> "VerifyResultModel":
        return cls(
            target=result.target,
            n=result.n,
            checked=result.checked,
            ok=result.ok,
            mismatches=list(result.mismatches),
        )


class ClassImageModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    omega: OrbitRepModel
    xi_s: Optional[SignedJSON] = None
    xi_k: Optional[ShapePairJSON] = None
    method: Literal["combinatorial", "oracle"]
    error: Optional[str] = None

    @classmethod
    def from_domain(cls, entry: ClassImage) -> "ClassImageModel":
        return cls(
            omega=OrbitRepModel.from_domain(entry.omega),
            xi_s=signed_json(entry.xi_s) if entry.xi_s is not None else None,
            xi_k=shape_pair_json(entry.xi_k) if entry.xi_k is not None else None,
            method=entry.method,  # type: ignore[arg-type]
            error=entry.error,
        )


class ImageReportModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    classes: List[ClassImageModel]
    maximal: List[SignedJSON]
    checks: Dict[str, Any]

    @classmethod
    def from_domain(cls, report: ImageReport) -> "ImageReportModel":
        return cls(
            n=report.n,
            classes=[ClassImageModel.from_domain(c) for c in report.classes],
            maximal=[signed_json(d) for d in report.maximal],
            checks=dict(report.checks),
        )


class TableRowModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    tau: List[int]
    sigma: BijectionModel
    rs: RSPairModel
    triple: TripleModel
    phi: ShapePairJSON
    xi_s: SignedJSON

    @classmethod
    def from_domain(cls, row: TableRow) -> "TableRowModel":
        return cls(
            tau=list(row.tau.word),
            sigma=BijectionModel.from_domain(row.sigma),
            rs=RSPairModel(P=row.rs[0].as_lists(), Q=row.rs[1].as_lists()),
            triple=TripleModel.from_domain(row.triple),
            phi=shape_pair_json(row.phi),
            xi_s=signed_json(row.xi_s),
        )


class HealthResponse(BaseModel):
    model_config = ConfigDict(extra="forbid")

    status: str


def partition_json(lam: Partition) -> PartitionJSON:
    return list(lam.parts)


def shape_pair_json(pair: Any) -> ShapePairJSON:
    return [partition_json(pair[0]), partition_json(pair[1])]


def signed_json(diagram: SignedYoungDiagram) -> SignedJSON:
    return diagram.to_strings()
