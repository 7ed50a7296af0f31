"""Per-lemma verification reports, the per-instance replay of the positivity
argument, and the brute-force grid oracle."""

from .bounds import anchor_bounds, constants_report, h_lower_bounds, thresholds
from .hcert import TARGETS, verify_h_certificates
from .oracle import Witness, brute_min, grid_bounds, scan, sharpness
from .pipeline import BRANCHES, PROVED, PipelineTrace, Region, pipeline
from .report import LemmaReport, Step, summary_table
from .suite import LEMMA_IDS, REPORT_IDS, run_report, verify_lemma

__all__ = [
    "anchor_bounds", "constants_report", "h_lower_bounds", "thresholds",
    "TARGETS", "verify_h_certificates",
    "Witness", "brute_min", "grid_bounds", "scan", "sharpness",
    "BRANCHES", "PROVED", "PipelineTrace", "Region", "pipeline",
    "LemmaReport", "Step", "summary_table",
    "LEMMA_IDS", "REPORT_IDS", "run_report", "verify_lemma",
]
