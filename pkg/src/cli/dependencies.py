"""Service wiring for the CLI verbs."""

from typing import Callable, Dict, Tuple, Type

from pydantic import BaseModel

from ..application.dto.report import Report
from ..application.services import (
    CongruenceService,
    DemoService,
    ElementService,
    GraphService,
    VerificationService,
)
from ..infrastructure.config import Config
from .schemas import (
    AnalyzeArgs,
    ClosureArgs,
    CongruencesArgs,
    CyclesArgs,
    DemoArgs,
    EqArgs,
    EvalArgs,
    ImageArgs,
    VerifyArgs,
)

Handler = Callable[[Config, object], Report]


def get_graph_service(config: Config) -> GraphService:
    return GraphService(config)


def get_element_service(config: Config) -> ElementService:
    return ElementService(config)


def get_congruence_service(config: Config) -> CongruenceService:
    return CongruenceService(config)


def get_verification_service(config: Config) -> VerificationService:
    return VerificationService(config)


def get_demo_service(config: Config) -> DemoService:
    return DemoService(config)


VERBS: Dict[str, Tuple[Type[BaseModel], Handler]] = {
    "analyze": (AnalyzeArgs, lambda config, cmd: get_graph_service(config).analyze(cmd)),
    "closure": (ClosureArgs, lambda config, cmd: get_graph_service(config).closure(cmd)),
    "cycles": (CyclesArgs, lambda config, cmd: get_graph_service(config).cycles(cmd)),
    "eval": (EvalArgs, lambda config, cmd: get_element_service(config).eval(cmd)),
    "eq": (EqArgs, lambda config, cmd: get_element_service(config).eq(cmd)),
    "image": (ImageArgs, lambda config, cmd: get_element_service(config).image(cmd)),
    "congruences": (
        CongruencesArgs,
        lambda config, cmd: get_congruence_service(config).explore(cmd),
    ),
    "verify": (VerifyArgs, lambda config, cmd: get_verification_service(config).run(cmd)),
    "demo": (DemoArgs, lambda config, cmd: get_demo_service(config).run(cmd)),
}
