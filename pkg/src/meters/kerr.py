"""
Sonda Kerr de fase cruzada
==========================
Un fotón sonda recorre un interferómetro auxiliar cuya rama 'medio' atraviesa
medios Kerr junto a los brazos internos. Cuando el fotón del sistema está en
un brazo con peso w, la rama medio adquiere la fase φ·w. La sonda se
recombina en un divisor 50/50 con sesgo de cuadratura y el corrimiento de
fase se infiere del desbalance de intensidades.

Proyecto: Weak Trace Simulator
"""

from dataclasses import dataclass
from typing import Dict, Mapping, Tuple
import logging

import numpy as np

from circuit import StagedModel
from tsvf import ArmSet, SelectionPair, TwoStateVector
from tsvf.states import check_unit

from .errors import MeterConfigError, PostSelectionUnderflowError

logger = logging.getLogger(__name__)

QUADRATURE_BIAS = np.pi / 2
UNDERFLOW_PROBABILITY = 1e-300

# Modos de la sonda
MEDIUM, REFERENCE = 0, 1


@dataclass(frozen=True)
class KerrProbeConfig:
    """Pesos de solapamiento por brazo, fase cruzada φ y sesgo del interferómetro sonda"""

    weights: Mapping[str, float]
    phi: float
    bias: float = QUADRATURE_BIAS

    def __post_init__(self):
        object.__setattr__(self, "weights", dict(self.weights))
        for arm, w in self.weights.items():
            if not 0.0 <= w <= 1.0:
                raise MeterConfigError(f"peso fuera de [0, 1] en el brazo {arm}: {w}")
        if not any(w > 0 for w in self.weights.values()):
            raise MeterConfigError("al menos un peso debe ser no nulo")
        if not abs(self.phi) <= np.pi:
            raise MeterConfigError(f"|φ| debe ser ≤ π (φ = {self.phi})")

    def validate(self, model: StagedModel) -> Dict[str, int]:
        """Frontera en la que actúa el medio de cada brazo"""
        boundaries = {}
        for arm in self.weights:
            try:
                boundaries[arm] = model.boundary_of([arm])
            except ValueError:
                raise MeterConfigError(f"el brazo '{arm}' no existe en el circuito") from None
        return boundaries


@dataclass(frozen=True)
class KerrReadout:
    """Lectura del interferómetro sonda"""

    intensities: Tuple[float, float]
    inferred_shift: float
    weak_value_prediction: float
    post_selection_probability: float
    conditional_purity: float
    unconditioned_purity: float

    def to_dict(self) -> dict:
        return {
            'intensity_plus': self.intensities[0],
            'intensity_minus': self.intensities[1],
            'inferred_shift': self.inferred_shift,
            'weak_value_prediction': self.weak_value_prediction,
            'post_selection_probability': self.post_selection_probability,
            'conditional_purity': self.conditional_purity,
            'unconditioned_purity': self.unconditioned_purity,
        }


def _purity(rho: np.ndarray) -> float:
    return float(np.real(np.trace(rho @ rho)))


class KerrProbe:
    """Evolución conjunta fotón del sistema ⊗ fotón sonda"""

    def __init__(self, model: StagedModel, config: KerrProbeConfig):
        self.model = model
        self.config = config
        self.logger = logging.getLogger(__name__)
        self._boundaries = config.validate(model)

    def _imprint(self, state: np.ndarray, boundary: int) -> None:
        for arm, at in self._boundaries.items():
            if at == boundary:
                position = self.model.index_of(arm, boundary)
                state[position, MEDIUM] *= np.exp(1j * self.config.phi * self.config.weights[arm])

    def evolve(self, selection: SelectionPair) -> np.ndarray:
        """Estado conjunto final, forma (d, 2) con modos (medio, referencia)"""
        model = self.model
        check_unit(selection.pre, "el pre-estado")
        if selection.pre.arms != model.arms_at(0):
            raise MeterConfigError("el pre-estado no vive en la frontera 0")

        state = np.outer(selection.pre.amplitudes, np.ones(2) / np.sqrt(2))
        self._imprint(state, 0)
        for k, stage in enumerate(model.stages, start=1):
            state = stage.matrix @ state
            self._imprint(state, k)
        return state

    def read(self, selection: SelectionPair) -> KerrReadout:
        """
        Post-selecciona el sistema y lee la sonda

        Args:
            selection: Pre/post-selección del fotón del sistema

        Returns:
            KerrReadout con intensidades y corrimiento inferido

        Raises:
            PostSelectionUnderflowError: Si la probabilidad de post-selección es nula
        """
        state = self.evolve(selection)
        post = selection.post_state(self.model)
        conditioned = post.amplitudes.conj() @ state
        probability = float(np.sum(np.abs(conditioned) ** 2))
        if probability <= UNDERFLOW_PROBABILITY:
            raise PostSelectionUnderflowError(np.sqrt(probability))

        probe = conditioned / np.sqrt(probability)
        rotated = np.exp(1j * self.config.bias) * probe[REFERENCE]
        plus = abs(probe[MEDIUM] + rotated) ** 2 / 2
        minus = abs(probe[MEDIUM] - rotated) ** 2 / 2
        total = plus + minus
        plus, minus = plus / total, minus / total

        shift = float(np.arcsin(np.clip(plus - minus, -1.0, 1.0)) + self.config.bias - np.pi / 2)

        unconditioned = state.T @ state.conj()
        readout = KerrReadout(
            intensities=(float(plus), float(minus)),
            inferred_shift=shift,
            weak_value_prediction=self.weak_value_prediction(selection),
            post_selection_probability=probability,
            conditional_purity=_purity(np.outer(probe, probe.conj())),
            unconditioned_purity=_purity(unconditioned),
        )
        self.logger.debug(f"Sonda Kerr: corrimiento {shift:.6e}, predicción {readout.weak_value_prediction:.6e}")
        return readout

    def weak_value_prediction(self, selection: SelectionPair) -> float:
        """φ·Re[(Σ w_arm P_arm)_w]"""
        engine = TwoStateVector(self.model, selection)
        total = sum(
            w * engine.weak_value(ArmSet([arm], self._boundaries[arm]))
            for arm, w in self.config.weights.items()
        )
        return float(self.config.phi * np.real(total))


def kerr_probe_shift(model: StagedModel, selection: SelectionPair,
                     config: KerrProbeConfig) -> KerrReadout:
    """
    Corrimiento de fase de la sonda Kerr para un sistema pre y post-seleccionado

    Args:
        model: Modelo compilado
        selection: Pre/post-selección
        config: Configuración de la sonda

    Returns:
        KerrReadout
    """
    return KerrProbe(model, config).read(selection)
