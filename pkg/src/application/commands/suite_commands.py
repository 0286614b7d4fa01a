"""Commands for the verbs that do not read a graph file."""

from dataclasses import dataclass

VERIFY_SUITES = (
    "groupoids",
    "matrices",
    "graphs",
    "oracle",
    "laws",
    "pi",
    "lpa",
    "semilattice",
    "tropical",
    "ideals",
    "confluence",
)

DEMOS = ("rose-omega", "tropical", "semilattice")


@dataclass
class CongruencesCommand:
    """Command to explore the congruences of a built-in or serialized finite algebra."""

    algebra: str


@dataclass
class VerifyCommand:
    """Command to run one verification suite, or ``all`` of them."""

    suite: str = "all"


@dataclass
class DemoCommand:
    """Command to run a worked example."""

    name: str
