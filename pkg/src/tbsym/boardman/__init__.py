"""Thom-Boardman engine: oracle chain, structured chain, jets and certificates."""

from .certificate import CONFIRMED, PARTIAL, VIOLATION, Certificate, certify
from .ideal import (IdealPresentation, JetSpan, corank_at_origin, ideal_equal_mod_jet,
                    jet_membership)
from .identities import CheckResult, run_identity_checks
from .oracle import c_ideal, critical_extension, oracle_chain, tb_symbol_oracle
from .records import (CapExceeded, ChainStabilized, ExtensionCertificate, JetConfig,
                      StepRecord, TBSymbol, TheoremViolation)
from .structured import structured_chain, tb_symbol_structured

__all__ = [
    "CONFIRMED", "PARTIAL", "VIOLATION", "Certificate", "certify",
    "IdealPresentation", "JetSpan", "corank_at_origin", "ideal_equal_mod_jet", "jet_membership",
    "CheckResult", "run_identity_checks",
    "c_ideal", "critical_extension", "oracle_chain", "tb_symbol_oracle",
    "CapExceeded", "ChainStabilized", "ExtensionCertificate", "JetConfig", "StepRecord",
    "TBSymbol", "TheoremViolation", "structured_chain", "tb_symbol_structured",
]
