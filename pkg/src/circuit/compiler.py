"""
Compilador de circuitos
=======================
Convierte un CircuitSpec en una secuencia de etapas unitarias sobre el
espacio de brazos vivos. La dimensión es constante: la frontera 0 contiene
el brazo fuente y todos los puertos de vacío, y cada elemento reemplaza sus
etiquetas de entrada por las de salida en las mismas posiciones.

Proyecto: Weak Trace Simulator
"""

from dataclasses import dataclass, field, replace
from functools import reduce
from typing import Iterable, Optional, Tuple
import logging

import numpy as np

from .elements import MIRROR, VACUUM, CircuitSpec, Element, build_spec, vacuum_label
from .errors import CircuitError, UnitarityError, UnknownArmError
from .paths import enumerate_paths

logger = logging.getLogger(__name__)

UNITARITY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Stage:
    """Etapa compilada: un elemento actuando sobre el espacio completo"""

    element: Element
    matrix: np.ndarray
    arms_in: Tuple[str, ...]
    arms_out: Tuple[str, ...]
    positions: Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class StagedModel:
    """Secuencia de etapas unitarias y tabla de caminos fuente -> detector"""

    spec: CircuitSpec
    boundaries: Tuple[Tuple[str, ...], ...]
    stages: Tuple[Stage, ...]
    path_table: tuple = field(default=())

    @property
    def dimension(self) -> int:
        return len(self.boundaries[0])

    @property
    def n_stages(self) -> int:
        return len(self.stages)

    @property
    def final_boundary(self) -> int:
        return len(self.stages)

    @property
    def source_arm(self) -> str:
        return self.spec.source_arm

    @property
    def detect_arms(self) -> Tuple[str, ...]:
        return self.spec.detect_arms

    @property
    def mirror_tags(self) -> Tuple[str, ...]:
        return tuple(stage.element.tag for stage in self.stages if stage.element.kind == MIRROR)

    def arms_at(self, boundary: int) -> Tuple[str, ...]:
        """Etiquetas vivas en la frontera indicada (0 = antes de la primera etapa)"""
        if not 0 <= boundary <= self.final_boundary:
            raise CircuitError(f"frontera fuera de rango: {boundary} (válidas 0..{self.final_boundary})")
        return self.boundaries[boundary]

    def index_of(self, arm: str, boundary: int) -> int:
        """
        Posición de un brazo en una frontera

        Raises:
            UnknownArmError: Si el brazo no está vivo en esa frontera
        """
        live = self.arms_at(boundary)
        try:
            return live.index(arm)
        except ValueError:
            raise UnknownArmError(arm) from None

    def boundary_of(self, arms: Iterable[str]) -> int:
        """
        Primera frontera en la que todos los brazos están vivos

        Raises:
            UnknownArmError: Si no existe tal frontera
        """
        wanted = set(arms)
        for k, labels in enumerate(self.boundaries):
            if wanted.issubset(labels):
                return k
        missing = sorted(wanted - set().union(*map(set, self.boundaries)))
        raise UnknownArmError(missing[0] if missing else ",".join(sorted(wanted)))

    def mirror_boundary(self, tag: str) -> Tuple[int, str]:
        """Frontera y brazo de entrada del espejo con la etiqueta dada"""
        for k, stage in enumerate(self.stages):
            if stage.element.kind == MIRROR and stage.element.tag == tag:
                return k, stage.element.inputs[0]
        raise KeyError(f"espejo desconocido '{tag}'")

    def transfer_matrix(self, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
        """Producto U_stop···U_{start+1} (identidad si no hay etapas)"""
        stop = self.final_boundary if stop is None else stop
        identity = np.eye(self.dimension, dtype=complex)
        return reduce(lambda acc, stage: stage.matrix @ acc, self.stages[start:stop], identity)

    def transfer_amplitude(self, detector: Optional[str] = None) -> complex:
        """Amplitud fuente -> detector de las etapas compuestas"""
        detector = detector or self.spec.detect_arm
        row = self.index_of(detector, self.final_boundary)
        col = self.index_of(self.source_arm, 0)
        return complex(self.transfer_matrix()[row, col])

    def max_unitarity_defect(self) -> float:
        """max_k ‖U_k†U_k − I‖_max"""
        if not self.stages:
            return 0.0
        identity = np.eye(self.dimension)
        return max(
            float(np.max(np.abs(stage.matrix.conj().T @ stage.matrix - identity)))
            for stage in self.stages
        )


class CircuitCompiler:
    """Compila circuitos validados a modelos por etapas"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def compile(self, spec: CircuitSpec) -> StagedModel:
        """
        Compila el circuito

        Args:
            spec: Circuito (se vuelve a validar)

        Returns:
            StagedModel con su tabla de caminos
        """
        spec = build_spec(spec.elements, [spec.source_arm], spec.detect_arms)

        labels = [spec.source_arm]
        for element in spec.elements:
            for port, arm in enumerate(element.inputs, start=1):
                if arm == VACUUM:
                    labels.append(vacuum_label(element.name, port))

        boundaries = [tuple(labels)]
        stages = []
        dimension = len(labels)

        for element in spec.elements:
            arms_in = tuple(labels)
            positions = tuple(
                labels.index(vacuum_label(element.name, port) if arm == VACUUM else arm)
                for port, arm in enumerate(element.inputs, start=1)
            )

            matrix = np.eye(dimension, dtype=complex)
            matrix[np.ix_(positions, positions)] = element.local_matrix()
            matrix.setflags(write=False)

            defect = float(np.max(np.abs(matrix.conj().T @ matrix - np.eye(dimension))))
            if defect > UNITARITY_TOL:
                raise UnitarityError(f"la etapa '{element.name}' no es unitaria ({defect:.3e})",
                                     line=element.line)

            for position, arm in zip(positions, element.outputs):
                labels[position] = arm

            stages.append(Stage(element=element, matrix=matrix, arms_in=arms_in,
                                arms_out=tuple(labels), positions=positions))
            boundaries.append(tuple(labels))

        model = StagedModel(spec=spec, boundaries=tuple(boundaries), stages=tuple(stages))
        model = replace(model, path_table=enumerate_paths(model))

        self.logger.info(
            f"✅ Circuito compilado: {len(stages)} etapas, dimensión {dimension}, "
            f"{len(model.path_table)} caminos hacia {spec.detect_arm}"
        )
        return model


def compile_circuit(spec: CircuitSpec) -> StagedModel:
    """
    Compila un CircuitSpec a un StagedModel

    Args:
        spec: Circuito validado

    Returns:
        StagedModel
    """
    return CircuitCompiler().compile(spec)
