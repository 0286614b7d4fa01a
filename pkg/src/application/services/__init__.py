"""Application services for use case orchestration."""

from .congruence_service import CongruenceService
from .demo_service import DemoService
from .element_service import ElementService
from .graph_service import GraphService
from .verification_service import VerificationService

__all__ = [
    "CongruenceService",
    "DemoService",
    "ElementService",
    "GraphService",
    "VerificationService",
]
