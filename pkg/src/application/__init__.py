"""Use cases behind the lab tasks, the task runner and the oracle registry."""

from .context import LabContext
from .ddcoupling import DDCouplingAuditUseCase, DDCouplingSumsUseCase, VerifyDDCouplingUseCase
from .folner import FolnerStatsUseCase
from .groups import CheckGroupUseCase
from .oracles import ORACLES, Oracle, RunOracleUseCase, oracle_names
from .profiles import BuildProfileUseCase
from .runner import SUMMARY_FILE, TASK_HANDLERS, RunLabUseCase
from .zcoupling import VerifyZCouplingUseCase, ZCouplingSumsUseCase

__all__ = [
    "BuildProfileUseCase",
    "CheckGroupUseCase",
    "DDCouplingAuditUseCase",
    "DDCouplingSumsUseCase",
    "FolnerStatsUseCase",
    "LabContext",
    "ORACLES",
    "Oracle",
    "RunLabUseCase",
    "RunOracleUseCase",
    "SUMMARY_FILE",
    "TASK_HANDLERS",
    "VerifyDDCouplingUseCase",
    "VerifyZCouplingUseCase",
    "ZCouplingSumsUseCase",
    "oracle_names",
]
