"""
Motor de dos vectores de estado
================================
Estados hacia adelante y hacia atrás, valores débiles de proyectores sobre
conjuntos de brazos y probabilidades ABL para particiones proyectivas
(posiblemente degeneradas).

Proyecto: Weak Trace Simulator
"""

from typing import List, Optional, Sequence
import logging

import numpy as np

from circuit import StagedModel

from .errors import ArmSetError, PartitionError, SelectionError, UndefinedWeakValueError
from .states import ArmSet, PathState, Post, SelectionPair, check_unit

logger = logging.getLogger(__name__)

ORTHOGONALITY_TOL = 1e-12
CERTAINTY_TOL = 1e-10


class TwoStateVector:
    """Descripción de un sistema pre y post-seleccionado sobre un modelo compilado"""

    def __init__(self, model: StagedModel, selection: SelectionPair):
        """
        Inicializa el motor y propaga ambos estados

        Args:
            model: Modelo compilado
            selection: Par de pre/post-selección
        """
        self.model = model
        self.selection = selection
        self.logger = logging.getLogger(__name__)
        self._forward = forward_states(model, selection.pre)
        self._backward = backward_states(model, selection.post)

    @property
    def forward(self) -> List[PathState]:
        return list(self._forward)

    @property
    def backward(self) -> List[PathState]:
        return list(self._backward)

    def overlap(self, boundary: int) -> complex:
        """<φ_k|ψ_k> (independiente de k por unitariedad)"""
        if not 0 <= boundary <= self.model.final_boundary:
            raise ArmSetError(f"frontera fuera de rango: {boundary}")
        return self._backward[boundary].inner(self._forward[boundary])

    def _mask(self, arms: ArmSet) -> tuple:
        boundary = arms.resolve(self.model)
        if not 0 <= boundary <= self.model.final_boundary:
            raise ArmSetError(f"frontera fuera de rango: {boundary}")
        live = self.model.arms_at(boundary)
        missing = sorted(arms.arms - set(live))
        if missing:
            raise ArmSetError(f"brazos no vivos en la frontera {boundary}: {', '.join(missing)}")
        mask = np.array([arm in arms.arms for arm in live])
        return boundary, mask

    def _checked_overlap(self, boundary: int) -> complex:
        overlap = self.overlap(boundary)
        if abs(overlap) < ORTHOGONALITY_TOL:
            raise UndefinedWeakValueError(abs(overlap), boundary)
        return overlap

    def projected_amplitude(self, arms: ArmSet) -> complex:
        """<φ_k|P_arms|ψ_k>"""
        boundary, mask = self._mask(arms)
        phi = self._backward[boundary].amplitudes
        psi = self._forward[boundary].amplitudes
        return complex(np.vdot(phi, np.where(mask, psi, 0)))

    def weak_value(self, arms: ArmSet) -> complex:
        """
        Valor débil del proyector sobre un conjunto de brazos

        Args:
            arms: Conjunto de brazos vivos en una frontera

        Returns:
            <φ|P|ψ> / <φ|ψ> como número complejo

        Raises:
            UndefinedWeakValueError: Si |<φ|ψ>| < 1e-12
        """
        boundary, _ = self._mask(arms)
        overlap = self._checked_overlap(boundary)
        value = self.projected_amplitude(arms) / overlap
        self.logger.debug(f"(P_{arms})_w = {value:.6g}")
        return value

    def abl_probabilities(self, partition: Sequence[ArmSet]) -> List[float]:
        """
        Distribución ABL de una partición proyectiva

        Args:
            partition: Conjuntos disjuntos que cubren los brazos de una frontera

        Returns:
            |<φ|P_j|ψ>|² / Σ_m |<φ|P_m|ψ>|² para cada j
        """
        boundary = self.partition_boundary(partition)
        self._checked_overlap(boundary)

        weights = [abs(self.projected_amplitude(ArmSet(part.arms, boundary))) ** 2 for part in partition]
        total = sum(weights)
        if total == 0:
            raise UndefinedWeakValueError(0.0, boundary)
        return [w / total for w in weights]

    def abl_probability(self, partition: Sequence[ArmSet], outcome: int) -> float:
        """Probabilidad ABL del resultado 'outcome' de la partición"""
        if not 0 <= outcome < len(partition):
            raise PartitionError(f"resultado fuera de rango: {outcome}")
        return self.abl_probabilities(partition)[outcome]

    def certainty_check(self, arms: ArmSet) -> Optional[int]:
        """
        Autovalor obtenido con certeza al medir fuertemente el proyector

        Returns:
            1 si la probabilidad ABL de encontrarlo es 1, 0 si es 0, None en otro caso
        """
        boundary, _ = self._mask(arms)
        complement = frozenset(self.model.arms_at(boundary)) - arms.arms
        partition = [ArmSet(arms.arms, boundary)]
        if complement:
            partition.append(ArmSet(complement, boundary))

        probability = self.abl_probabilities(partition)[0]
        if abs(probability - 1.0) <= CERTAINTY_TOL:
            return 1
        if probability <= CERTAINTY_TOL:
            return 0
        return None

    def partition_boundary(self, partition: Sequence[ArmSet]) -> int:
        """Verifica la partición y devuelve su frontera común"""
        if not partition:
            raise PartitionError("partición vacía")

        explicit = {part.stage for part in partition if part.stage is not None}
        if len(explicit) > 1:
            raise PartitionError("los conjuntos de la partición están en fronteras distintas")
        union = frozenset().union(*(part.arms for part in partition))
        boundary = explicit.pop() if explicit else self.model.boundary_of(union)
        if not 0 <= boundary <= self.model.final_boundary:
            raise PartitionError(f"frontera fuera de rango: {boundary}")

        live = self.model.arms_at(boundary)
        seen = set()
        for part in partition:
            if not part.arms:
                raise PartitionError("la partición contiene un conjunto vacío")
            overlap = seen & part.arms
            if overlap:
                raise PartitionError(f"conjuntos solapados en: {', '.join(sorted(overlap))}")
            seen |= part.arms

        if seen != set(live):
            missing = sorted(set(live) - seen)
            extra = sorted(seen - set(live))
            raise PartitionError(
                f"la partición no cubre la frontera {boundary}: faltan {missing}, sobran {extra}"
            )
        return boundary


# ==================== FUNCIONES DE UTILIDAD ====================

def forward_states(model: StagedModel, pre: PathState) -> List[PathState]:
    """
    Estados hacia adelante en cada frontera

    Args:
        model: Modelo compilado
        pre: Estado unitario en la frontera 0

    Returns:
        Lista de N+1 estados; el k-ésimo es U_k···U_1 pre
    """
    if pre.arms != model.arms_at(0):
        raise SelectionError(
            f"dimensión incompatible: el pre-estado vive en {pre.arms}, el modelo en {model.arms_at(0)}"
        )
    check_unit(pre, "el pre-estado")

    states = [pre]
    vector = pre.amplitudes
    for k, stage in enumerate(model.stages, start=1):
        vector = stage.matrix @ vector
        states.append(PathState(model.arms_at(k), vector, k))
    return states


def backward_states(model: StagedModel, post: Post) -> List[PathState]:
    """
    Estados hacia atrás en cada frontera

    Args:
        model: Modelo compilado
        post: Detector o estado unitario en la frontera final

    Returns:
        Lista de N+1 estados; el k-ésimo es U_{k+1}†···U_N† post
    """
    final = model.final_boundary
    if isinstance(post, str):
        post = PathState.basis(model.arms_at(final), post, final)
    elif post.arms != model.arms_at(final):
        raise SelectionError(
            f"dimensión incompatible: el post-estado vive en {post.arms}, el modelo en {model.arms_at(final)}"
        )
    check_unit(post, "el post-estado")

    states = [post]
    vector = post.amplitudes
    for k in range(final, 0, -1):
        vector = model.stages[k - 1].matrix.conj().T @ vector
        states.append(PathState(model.arms_at(k - 1), vector, k - 1))
    return states[::-1]


def weak_value(model: StagedModel, selection: SelectionPair, arms: ArmSet) -> complex:
    """Valor débil del proyector sobre 'arms'"""
    return TwoStateVector(model, selection).weak_value(arms)


def abl_probability(model: StagedModel, selection: SelectionPair,
                    partition: Sequence[ArmSet], outcome: int) -> float:
    """Probabilidad ABL del resultado 'outcome'"""
    return TwoStateVector(model, selection).abl_probability(partition, outcome)


def certainty_check(model: StagedModel, selection: SelectionPair, arms: ArmSet) -> Optional[int]:
    """Autovalor cierto del proyector sobre 'arms' (o None)"""
    return TwoStateVector(model, selection).certainty_check(arms)
