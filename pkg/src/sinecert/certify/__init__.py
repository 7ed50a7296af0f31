"""Certification primitives: point-chain certificates for monotone
differences, Sturm positivity, Fejer convexity and related reductions."""

from __future__ import annotations

from .criteria import (INCONCLUSIVE, SUP_AT_HIGH, SUP_AT_LOW, PowerDiffFn, alt_lower_bound,
                       fejer_check, xi_endpoint_reduce)
from .dif import (CertificateParseError, CertificationError, CheckResult, DifCertificate,
                  certificate_from_chain, check_certificate, dif_certify, dumps, loads)
from .expr import Expr, X, parse
from .monotone import DECREASING, INCREASING, MonotoneFn, Verdict, verify_monotone
from .sturm import RationalPolynomial, SturmResult, sturm_count, sturm_positive

__all__ = [
    "INCONCLUSIVE", "SUP_AT_HIGH", "SUP_AT_LOW", "PowerDiffFn", "alt_lower_bound", "fejer_check",
    "xi_endpoint_reduce", "CertificateParseError", "CertificationError", "CheckResult",
    "DifCertificate", "certificate_from_chain", "check_certificate", "dif_certify", "dumps", "loads",
    "Expr", "X", "parse", "DECREASING", "INCREASING", "MonotoneFn", "Verdict", "verify_monotone",
    "RationalPolynomial", "SturmResult", "sturm_count", "sturm_positive",
]
