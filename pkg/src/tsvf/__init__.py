"""
Módulo de dos vectores de estado
Estados hacia adelante/atrás, valores débiles y probabilidades ABL
"""

from .engine import (
    CERTAINTY_TOL,
    ORTHOGONALITY_TOL,
    TwoStateVector,
    abl_probability,
    backward_states,
    certainty_check,
    forward_states,
    weak_value,
)
from .errors import (
    ArmSetError,
    PartitionError,
    SelectionError,
    UndefinedQuantityError,
    UndefinedWeakValueError,
)
from .properties import PropertyReport, PropertySuite, random_chain_model
from .states import ArmSet, PathState, SelectionPair

__all__ = [
    'PathState',
    'SelectionPair',
    'ArmSet',
    'TwoStateVector',
    'forward_states',
    'backward_states',
    'weak_value',
    'abl_probability',
    'certainty_check',
    'PropertySuite',
    'PropertyReport',
    'random_chain_model',
    'ArmSetError',
    'PartitionError',
    'SelectionError',
    'UndefinedQuantityError',
    'UndefinedWeakValueError',
    'ORTHOGONALITY_TOL',
    'CERTAINTY_TOL',
]
