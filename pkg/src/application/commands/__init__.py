"""Command objects, one per CLI verb."""

from .graph_commands import (
    AnalyzeCommand,
    ClosureCommand,
    CyclesCommand,
    EqCommand,
    EvalCommand,
    ImageCommand,
)
from .suite_commands import DEMOS, VERIFY_SUITES, CongruencesCommand, DemoCommand, VerifyCommand

__all__ = [
    "AnalyzeCommand",
    "ClosureCommand",
    "CyclesCommand",
    "EvalCommand",
    "EqCommand",
    "ImageCommand",
    "CongruencesCommand",
    "VerifyCommand",
    "DemoCommand",
    "DEMOS",
    "VERIFY_SUITES",
]
