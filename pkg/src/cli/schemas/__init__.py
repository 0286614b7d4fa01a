"""Pydantic schemas for CLI verb arguments."""

from .command_schemas import (
    AnalyzeArgs,
    ClosureArgs,
    CongruencesArgs,
    CyclesArgs,
    DemoArgs,
    EqArgs,
    EvalArgs,
    GlobalOptions,
    ImageArgs,
    VerifyArgs,
)

__all__ = [
    "GlobalOptions",
    "AnalyzeArgs",
    "ClosureArgs",
    "CyclesArgs",
    "EvalArgs",
    "EqArgs",
    "ImageArgs",
    "CongruencesArgs",
    "VerifyArgs",
    "DemoArgs",
]
