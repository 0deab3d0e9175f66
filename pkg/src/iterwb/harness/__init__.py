"""Random step functions, seeded campaigns, shrinking and trace reports."""

from .campaigns import LEMMA_IDS, CheckReport, check_lemma, falsify_lemma, replay, shrink
from .dsl import Dsl, Step2, gen_step_fn, gen_word, parse_dsl, to_term
from .mutants import MUTANTS, self_test
from .report import trace_report

__all__ = [
    "LEMMA_IDS",
    "MUTANTS",
    "CheckReport",
    "Dsl",
    "Step2",
    "check_lemma",
    "falsify_lemma",
    "gen_step_fn",
    "gen_word",
    "parse_dsl",
    "replay",
    "self_test",
    "shrink",
    "to_term",
    "trace_report",
]
