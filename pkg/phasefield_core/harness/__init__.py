"""
Experiment harness.

Ansatz generators, JSON experiment configuration, the ε-sweep runner, run
summaries and the ``phasefield`` command line.
"""
from ._ansatz import KINDS, AnsatzSpec, generate, skeleton
from ._cli import main
from ._config import DiagnosticsSpec, ExperimentConfig, GridSpec
from ._report import report
from ._sweep import run_entry, run_sweep, solve_state

__all__ = [
    "AnsatzSpec",
    "DiagnosticsSpec",
    "ExperimentConfig",
    "GridSpec",
    "KINDS",
    "generate",
    "main",
    "report",
    "run_entry",
    "run_sweep",
    "skeleton",
    "solve_state",
]
