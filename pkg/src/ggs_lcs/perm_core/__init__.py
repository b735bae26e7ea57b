"""Permutation groups: elements, stabilizer chains and lower central series."""

from .chain import (
    LevelChain,
    SchreierSimsChain,
    StabilizerChain,
    build_chain,
    contains,
    enumerate_group,
    normal_closure,
    subgroup_chain,
)
from .permutation import Permutation, commutator, compose, identity, inverse, left_normed
from .series import NonNilpotentError, SeriesReport, lower_central_series
from .treeshape import TreeShape, prime_power_shape, tree_shape

__all__ = [
    "LevelChain",
    "NonNilpotentError",
    "Permutation",
    "SchreierSimsChain",
    "SeriesReport",
    "StabilizerChain",
    "TreeShape",
    "build_chain",
    "commutator",
    "compose",
    "contains",
    "enumerate_group",
    "identity",
    "inverse",
    "left_normed",
    "lower_central_series",
    "normal_closure",
    "prime_power_shape",
    "subgroup_chain",
    "tree_shape",
]
