"""
Marcadores ancilla
==================
Cada marcador es un qubit que rota |0> -> cos ε|0> + sin ε|1> cuando el fotón
está en su brazo. La traza débil de un brazo es la norma de la componente con
el ancilla en |1> del estado conjunto condicionado al detector.

Proyecto: Weak Trace Simulator
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple
import logging

import numpy as np

from circuit import StagedModel
from tsvf import PathState
from tsvf.states import Post, check_unit

from .errors import MeterConfigError, PostSelectionUnderflowError

logger = logging.getLogger(__name__)

UNDERFLOW_NORM = 1e-300


@dataclass(frozen=True)
class Marker:
    """Acoplamiento de un ancilla a un brazo (stage None = primera frontera viva)"""

    arm: str
    epsilon: float
    stage: Optional[int] = None

    def __post_init__(self):
        if not 0.0 <= self.epsilon <= np.pi / 2:
            raise MeterConfigError(f"ε fuera de [0, π/2] en el brazo {self.arm}: {self.epsilon}")


@dataclass(frozen=True)
class MarkerSet:
    """Lista ordenada de marcadores; el índice i corresponde al ancilla i"""

    markers: Tuple[Marker, ...]

    @classmethod
    def identical(cls, arms: Iterable[str], epsilon: float) -> "MarkerSet":
        """Mismo acoplamiento ε en todos los brazos"""
        return cls(tuple(Marker(arm, epsilon) for arm in arms))

    def __len__(self) -> int:
        return len(self.markers)

    def index_of(self, arm: str) -> int:
        for i, marker in enumerate(self.markers):
            if marker.arm == arm:
                return i
        raise KeyError(f"no hay marcador en el brazo '{arm}'")


@dataclass(frozen=True, eq=False)
class JointState:
    """Estado conjunto fotón ⊗ ancillas en la frontera final (forma (d, 2, ..., 2))"""

    arms: Tuple[str, ...]
    amplitudes: np.ndarray
    markers: MarkerSet

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def conditioned(self, post: Post) -> np.ndarray:
        """Estado (sin normalizar) de los ancillas condicionado a la post-selección"""
        if isinstance(post, str):
            if post not in self.arms:
                raise MeterConfigError(f"detector desconocido '{post}'")
            return self.amplitudes[self.arms.index(post)]
        if post.arms != self.arms:
            raise MeterConfigError("el post-estado no vive en la frontera final")
        return np.tensordot(post.amplitudes.conj(), self.amplitudes, axes=([0], [0]))


class MarkedModel:
    """Modelo conjunto: circuito más marcadores ancilla"""

    def __init__(self, model: StagedModel, markers: MarkerSet):
        """
        Valida los marcadores y resuelve sus fronteras

        Args:
            model: Modelo compilado
            markers: Conjunto de marcadores
        """
        self.model = model
        self.markers = markers
        self.logger = logging.getLogger(__name__)
        self.placements: List[Tuple[int, int]] = []

        for marker in markers.markers:
            try:
                boundary = model.boundary_of([marker.arm]) if marker.stage is None else marker.stage
            except ValueError:
                raise MeterConfigError(f"el brazo '{marker.arm}' no existe en el circuito") from None
            if not 0 <= boundary <= model.final_boundary or marker.arm not in model.arms_at(boundary):
                raise MeterConfigError(f"el brazo '{marker.arm}' no está vivo en la frontera {boundary}")
            self.placements.append((boundary, model.index_of(marker.arm, boundary)))

    @property
    def n_ancillas(self) -> int:
        return len(self.markers)

    def _rotate(self, state: np.ndarray, boundary: int) -> np.ndarray:
        for i, (marker, (at, position)) in enumerate(zip(self.markers.markers, self.placements)):
            if at != boundary:
                continue
            c, s = np.cos(marker.epsilon), np.sin(marker.epsilon)
            rotation = np.array([[c, -s], [s, c]])
            rotated = np.tensordot(rotation, state[position], axes=([1], [i]))
            state[position] = np.moveaxis(rotated, 0, i)
        return state

    def evolve(self, pre: Optional[PathState] = None) -> JointState:
        """
        Evolución exacta del estado conjunto

        Args:
            pre: Estado inicial del fotón (por defecto el brazo fuente)

        Returns:
            JointState en la frontera final
        """
        model = self.model
        pre = pre or PathState.basis(model.arms_at(0), model.source_arm, 0)
        if pre.arms != model.arms_at(0):
            raise MeterConfigError("el pre-estado no vive en la frontera 0")
        check_unit(pre, "el pre-estado")

        state = np.zeros((model.dimension,) + (2,) * self.n_ancillas, dtype=complex)
        state[(slice(None),) + (0,) * self.n_ancillas] = pre.amplitudes
        state = self._rotate(state, 0)

        for k, stage in enumerate(model.stages, start=1):
            state = np.tensordot(stage.matrix, state, axes=([1], [0]))
            state = self._rotate(state, k)

        return JointState(arms=model.arms_at(model.final_boundary), amplitudes=state, markers=self.markers)


# ==================== FUNCIONES DE UTILIDAD ====================

def attach_markers(model: StagedModel, markers: MarkerSet) -> MarkedModel:
    """Acopla marcadores ancilla a un modelo compilado"""
    return MarkedModel(model, markers)


def _conditioned_norm(joint: JointState, post: Post) -> Tuple[np.ndarray, float]:
    conditioned = joint.conditioned(post)
    norm = float(np.linalg.norm(conditioned))
    if norm <= UNDERFLOW_NORM:
        raise PostSelectionUnderflowError(norm)
    return conditioned, norm


def trace_magnitude(joint: JointState, post: Post, index: int) -> float:
    """
    Traza débil (nivel amplitud) del marcador 'index'

    Args:
        joint: Estado conjunto final
        post: Detector o post-estado
        index: Índice del marcador

    Returns:
        ‖componente con ancilla_i = |1>‖ / ‖estado condicionado‖
    """
    conditioned, norm = _conditioned_norm(joint, post)
    flipped = np.take(conditioned, 1, axis=index)
    return float(np.linalg.norm(flipped)) / norm


def trace_probability(joint: JointState, post: Post, index: int) -> float:
    """Traza débil a nivel probabilidad (cuadrado de trace_magnitude)"""
    return trace_magnitude(joint, post, index) ** 2


def trace_magnitudes(joint: JointState, post: Post) -> List[float]:
    """Traza de cada marcador en orden"""
    return [trace_magnitude(joint, post, i) for i in range(len(joint.markers))]


def ancilla_flip_probability(joint: JointState, index: int) -> float:
    """Probabilidad (sin post-selección) de que el ancilla 'index' esté en |1>"""
    flipped = np.take(joint.amplitudes, 1, axis=index + 1)
    return float(np.sum(np.abs(flipped) ** 2))


def detector_probability(joint: JointState, post: Post) -> float:
    """Probabilidad de post-selección marginalizando los ancillas"""
    return float(np.sum(np.abs(joint.conditioned(post)) ** 2))
