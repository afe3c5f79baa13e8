"""
Módulo de circuitos
Parser del DSL, compilación a etapas unitarias y enumeración de caminos
"""

from .compiler import CircuitCompiler, Stage, StagedModel, compile_circuit
from .elements import BEAMSPLITTER, MIRROR, PHASESHIFT, VACUUM, CircuitSpec, Element
from .errors import (
    CircuitError,
    CircuitSyntaxError,
    CycleError,
    DuplicateConsumerError,
    DuplicateProducerError,
    MissingDeclarationError,
    UnitarityError,
    UnknownArmError,
)
from .parser import CircuitParser, format_circuit, load_circuit, parse_circuit
from .paths import PathRecord, enumerate_paths, path_sum, walk_paths

__all__ = [
    'CircuitSpec',
    'Element',
    'Stage',
    'StagedModel',
    'PathRecord',
    'CircuitParser',
    'CircuitCompiler',
    'parse_circuit',
    'load_circuit',
    'format_circuit',
    'compile_circuit',
    'enumerate_paths',
    'walk_paths',
    'path_sum',
    'CircuitError',
    'CircuitSyntaxError',
    'CycleError',
    'DuplicateConsumerError',
    'DuplicateProducerError',
    'MissingDeclarationError',
    'UnitarityError',
    'UnknownArmError',
    'BEAMSPLITTER',
    'MIRROR',
    'PHASESHIFT',
    'VACUUM',
]
