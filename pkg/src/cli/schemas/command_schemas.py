"""Pydantic schemas validating the arguments of each verb."""

from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from ...application.commands import (
    DEMOS,
    VERIFY_SUITES,
    AnalyzeCommand,
    ClosureCommand,
    CongruencesCommand,
    CyclesCommand,
    DemoCommand,
    EqCommand,
    EvalCommand,
    ImageCommand,
    VerifyCommand,
)


class GlobalOptions(BaseModel):
    """Flags shared by every verb."""

    max_carrier: Optional[int] = Field(None, gt=0, description="Carrier-size bound override")
    max_vertices: Optional[int] = Field(None, gt=0, description="Vertex bound for H&S enumeration")
    seed: Optional[int] = Field(None, ge=0, description="Seed for randomized property runs")
    output_format: Literal["text", "machine"] = Field("text", description="Report format")

    def config_overrides(self) -> dict:
        """Settings fields to replace for this run."""
        overrides = {
            "MAX_CARRIER": self.max_carrier,
            "MAX_VERTICES": self.max_vertices,
            "SEED": self.seed,
        }
        return {key: value for key, value in overrides.items() if value is not None}


class GraphArgs(BaseModel):
    """Arguments of the verbs that read a graph file."""

    graph: str = Field(..., min_length=1, description="Path to a .graph file")

    @field_validator("graph")
    @classmethod
    def graph_file_exists(cls, v: str) -> str:
        if not Path(v).is_file():
            raise ValueError(f"graph file '{v}' does not exist")
        return v


class AnalyzeArgs(GraphArgs):
    def to_command(self) -> AnalyzeCommand:
        return AnalyzeCommand(graph_path=self.graph)


class ClosureArgs(GraphArgs):
    vertices: List[str] = Field(default_factory=list, description="Seed vertices")

    def to_command(self) -> ClosureCommand:
        return ClosureCommand(graph_path=self.graph, vertices=list(self.vertices))


class CyclesArgs(GraphArgs):
    def to_command(self) -> CyclesCommand:
        return CyclesCommand(graph_path=self.graph)


class EvalArgs(GraphArgs):
    polynomial: str = Field(
        ..., min_length=1, description="Laurent polynomial over B, e.g. x^-1 + 1"
    )
    cycle: str = Field(..., min_length=1, description="Cycle as a dotted edge path")

    def to_command(self) -> EvalCommand:
        return EvalCommand(graph_path=self.graph, polynomial=self.polynomial, cycle=self.cycle)


class EqArgs(GraphArgs):
    left: str = Field(..., min_length=1, description="Left element expression")
    right: str = Field(..., min_length=1, description="Right element expression")

    def to_command(self) -> EqCommand:
        return EqCommand(graph_path=self.graph, left=self.left, right=self.right)


class ImageArgs(GraphArgs):
    expression: str = Field(..., min_length=1, description="Element expression")

    def to_command(self) -> ImageCommand:
        return ImageCommand(graph_path=self.graph, expression=self.expression)


class CongruencesArgs(BaseModel):
    algebra: str = Field(..., min_length=1, description="Built-in algebra name or table file")

    def to_command(self) -> CongruencesCommand:
        return CongruencesCommand(algebra=self.algebra)


class VerifyArgs(BaseModel):
    suite: str = Field("all", description="Suite name or 'all'")

    @field_validator("suite")
    @classmethod
    def known_suite(cls, v: str) -> str:
        if v != "all" and v not in VERIFY_SUITES:
            raise ValueError(
                f"unknown suite '{v}' (expected one of {', '.join(VERIFY_SUITES)}, all)"
            )
        return v

    def to_command(self) -> VerifyCommand:
        return VerifyCommand(suite=self.suite)


class DemoArgs(BaseModel):
    name: str = Field(..., description="Demo name")

    @field_validator("name")
    @classmethod
    def known_demo(cls, v: str) -> str:
        if v not in DEMOS:
            raise ValueError(f"unknown demo '{v}' (expected one of {', '.join(DEMOS)})")
        return v

    def to_command(self) -> DemoCommand:
        return DemoCommand(name=self.name)
