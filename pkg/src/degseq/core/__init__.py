"""Degree-sequence model, statistics and graphicality."""

from .constraints import Pair, PairConstraint, normalise_pair, parse_pair
from .graphical import ball_member, erdos_gallai, is_graphical, koren, l1_distance, realisation_gap
from .sequence import DegreeSequence, ParityClass, SequenceStats, as_sequence, stats

__all__ = [
    "DegreeSequence",
    "Pair",
    "PairConstraint",
    "ParityClass",
    "SequenceStats",
    "as_sequence",
    "ball_member",
    "erdos_gallai",
    "is_graphical",
    "koren",
    "l1_distance",
    "normalise_pair",
    "parse_pair",
    "realisation_gap",
    "stats",
]
