"""
Módulo de medidores
Marcadores ancilla, puntero de espejos vibrantes y sonda Kerr
"""

from .errors import MeterConfigError, PostSelectionUnderflowError
from .kerr import KerrProbe, KerrProbeConfig, KerrReadout, kerr_probe_shift
from .markers import (
    JointState,
    MarkedModel,
    Marker,
    MarkerSet,
    ancilla_flip_probability,
    attach_markers,
    detector_probability,
    trace_magnitude,
    trace_magnitudes,
    trace_probability,
)
from .pointer import (
    MirrorModulation,
    MirrorTilt,
    QuadCellSeries,
    linear_response_series,
    mirror_weak_values,
    quad_cell_series,
    sample_grid,
)

__all__ = [
    'Marker',
    'MarkerSet',
    'MarkedModel',
    'JointState',
    'attach_markers',
    'trace_magnitude',
    'trace_magnitudes',
    'trace_probability',
    'ancilla_flip_probability',
    'detector_probability',
    'MirrorTilt',
    'MirrorModulation',
    'QuadCellSeries',
    'quad_cell_series',
    'linear_response_series',
    'mirror_weak_values',
    'sample_grid',
    'KerrProbe',
    'KerrProbeConfig',
    'KerrReadout',
    'kerr_probe_shift',
    'MeterConfigError',
    'PostSelectionUnderflowError',
]
