"""
Wire Models
Pydantic models for parameters, verdicts, lemma reports and census records.
Field names are part of the public JSON contract (docs/census-schema.md).
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class DezaParameters(BaseModel):
    """The quadruple (n, k, b, a) of a Deza graph, b >= a."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="Number of vertices")
    k: int = Field(..., description="Valency")
    b: int = Field(..., description="Larger common-neighbour count")
    a: int = Field(..., description="Smaller common-neighbour count")

    @model_validator(mode="after")
    def _check_ranges(self) -> "DezaParameters":
        if not self.n > self.k >= 1:
            raise ValueError(f"need n > k >= 1, got n={self.n}, k={self.k}")
        if not self.k >= self.b >= self.a >= 0:
            raise ValueError(f"need k >= b >= a >= 0, got k={self.k}, b={self.b}, a={self.a}")
        return self

    @classmethod
    def parse(cls, text: str) -> "DezaParameters":
        """Parse 'n,k,b,a' (parentheses and spaces allowed)."""
        parts = [p.strip() for p in text.strip().strip("()").split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected four comma-separated integers, got {text!r}")
        n, k, b, a = (int(p) for p in parts)
        return cls(n=n, k=k, b=b, a=a)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.n, self.k, self.b, self.a)

    @property
    def label(self) -> str:
        return "({},{},{},{})".format(*self.as_tuple())


class SrgParameters(BaseModel):
    """Strongly regular parameters (n, k, lambda, mu)."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    n: int
    k: int
    lambda_: int = Field(..., alias="lambda", description="Common neighbours of adjacent pairs")
    mu: int = Field(..., description="Common neighbours of distinct nonadjacent pairs (0 for K_n)")

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.n, self.k, self.lambda_, self.mu)


class FamilyIndex(BaseModel):
    """Indices of the 2-clique extension of K_{t,...,t} with s parts."""

    model_config = ConfigDict(frozen=True)

    s: int = Field(..., description="Number of parts")
    t: int = Field(..., description="Part size")


class FeasibilityReport(BaseModel):
    parameters: DezaParameters
    feasible: bool
    applicable: bool = Field(True, description="False when a standing hypothesis fails")
    violated: Optional[str] = Field(None, description="Short name of the first violated condition")
    reason: str = Field("", description="Human readable explanation")
    beta: Optional[str] = Field(None, description="Exact beta as a rational string")
    family: Optional[FamilyIndex] = None


class Counterexample(BaseModel):
    condition: str = Field(..., description="The check that failed")
    reason: str
    vertices: List[int] = Field(default_factory=list)


class Theorem1Witness(BaseModel):
    family: FamilyIndex
    parameters: DezaParameters
    twin: List[int] = Field(..., description="twin[v] is the vertex with N[v] equal to N[twin[v]]")
    parts: List[List[int]] = Field(..., description="The rho-classes, one per part")
    quotient_order: int
    relabeling: List[int] = Field(..., description="Vertex v maps to relabeling[v] of the family member")


class TheoremVerdict(BaseModel):
    holds: bool
    applicable: bool = Field(..., description="Strictly Deza with beta > 1")
    witness: Optional[Theorem1Witness] = None
    counterexample: Optional[Counterexample] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "TheoremVerdict":
        if (self.witness is None) == (self.counterexample is None):
            raise ValueError("a verdict carries exactly one of witness and counterexample")
        if self.holds != (self.witness is not None):
            raise ValueError("holding verdicts carry a witness, failing ones a counterexample")
        return self


class Theorem2Verdict(BaseModel):
    parameters: DezaParameters
    applicable: bool
    holds: bool
    reason: str = ""
    family: Optional[FamilyIndex] = None


class LemmaCheck(BaseModel):
    name: str
    statement: str
    applicable: bool
    passed: Optional[bool] = None
    precondition: Optional[str] = Field(None, description="Failed precondition when not applicable")
    details: str = ""
    vertices: List[int] = Field(default_factory=list)


class LemmaReport(BaseModel):
    applicable: bool
    precondition: Optional[str] = None
    checks: List[LemmaCheck] = Field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return self.applicable and all(c.passed for c in self.checks if c.applicable)

    def check(self, name: str) -> LemmaCheck:
        for entry in self.checks:
            if entry.name == name:
                return entry
        raise KeyError(name)


class CensusRecord(BaseModel):
    graph6: str
    parameters: DezaParameters
    alpha: int
    beta: int
    vertex_types: Optional[Dict[str, int]] = Field(None, description="Only under k = b+1 and beta > 1")
    theorem1: bool = Field(..., description="verify_theorem1 holds")
    theorem1_condition: Optional[str] = Field(None, description="First failed check when it does not")


class QuotientSummary(BaseModel):
    order: int
    edges: int
    complete: bool


class GraphReport(BaseModel):
    """Per-graph output of `deza analyze`."""

    index: int
    graph6: str
    n: int
    regular_degree: Optional[int] = None
    diameter: Optional[int] = None
    deza: bool
    parameters: Optional[DezaParameters] = None
    quadruple: Optional[str] = None
    strongly_regular: bool
    srg: Optional[SrgParameters] = None
    strictly_deza: bool
    deza_class: str
    alpha: Optional[int] = None
    beta: Optional[int] = None
    beta_formula: Optional[str] = None
    types: Optional[Dict[str, int]] = None
    rho_classes: Optional[List[List[int]]] = None
    quotient: Optional[QuotientSummary] = None
    notes: List[str] = Field(default_factory=list)
