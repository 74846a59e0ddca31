"""Theorem-verification harness: qualification tests, exact two-sided
checks, seeded instance generators and multi-trial suites."""
from .checks import CHECKS, check_theorem, composite_rhs, qualify
from .generators import KINDS, GenerationFailed, gen_instance
from .suite import SuiteReport, build_trial, run_suite, trial_seed
from .verdict import (EQUAL, MISMATCH, NOT_SATISFIED, QUALIFIED, SATISFIED, SKIPPED, Outcome,
                      Qualification, TheoremId, Verdict, instance_digest)

__all__ = [
    "CHECKS", "check_theorem", "composite_rhs", "qualify", "KINDS", "GenerationFailed",
    "gen_instance", "SuiteReport", "build_trial", "run_suite", "trial_seed", "EQUAL", "MISMATCH",
    "NOT_SATISFIED", "QUALIFIED", "SATISFIED", "SKIPPED", "Outcome", "Qualification", "TheoremId",
    "Verdict", "instance_digest",
]
