"""
Puntero transversal por espejos vibrantes
=========================================
Cada espejo inclinado desplaza el haz transversalmente en δ·sin(2πft). El
puntero es una gaussiana de ancho σ que se sigue de forma analítica a través
de los solapamientos entre caminos, sin malla espacial. La señal del detector
de cuatro cuadrantes es el desplazamiento medio <x>(t) condicionado a la
post-selección.

Proyecto: Weak Trace Simulator
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Tuple
import logging

import numpy as np
import pandas as pd

from circuit import StagedModel, walk_paths
from circuit.paths import PathRecord
from tsvf import ArmSet, SelectionPair, TwoStateVector

from .errors import MeterConfigError

logger = logging.getLogger(__name__)

POINTER_WIDTH = 1.0
DEGENERATE_NORM = 1e-300


@dataclass(frozen=True)
class MirrorTilt:
    """Inclinación sinusoidal de un espejo: amplitud δ y frecuencia f"""

    tag: str
    frequency: float
    amplitude: float

    def __post_init__(self):
        if not self.amplitude >= 0:
            raise MeterConfigError(f"δ negativo en el espejo {self.tag}: {self.amplitude}")
        if not np.isfinite(self.frequency):
            raise MeterConfigError(f"frecuencia no finita en el espejo {self.tag}")

    def displacement(self, times: np.ndarray) -> np.ndarray:
        return self.amplitude * np.sin(2 * np.pi * self.frequency * times)


@dataclass(frozen=True)
class MirrorModulation:
    """Conjunto de espejos modulados (frecuencias distintas dos a dos)"""

    tilts: Tuple[MirrorTilt, ...]
    sigma: float = POINTER_WIDTH

    def __post_init__(self):
        tags = [tilt.tag for tilt in self.tilts]
        if len(set(tags)) != len(tags):
            raise MeterConfigError("espejo modulado dos veces")
        frequencies = [tilt.frequency for tilt in self.tilts]
        if len(set(frequencies)) != len(frequencies):
            raise MeterConfigError("las frecuencias de modulación deben ser distintas")
        if not self.sigma > 0:
            raise MeterConfigError(f"ancho de puntero inválido: {self.sigma}")

    @classmethod
    def from_mapping(cls, values: Mapping[str, Tuple[float, float]],
                     sigma: float = POINTER_WIDTH) -> "MirrorModulation":
        """Construye la modulación desde {espejo: (frecuencia, δ)}"""
        return cls(tuple(MirrorTilt(tag, f, delta) for tag, (f, delta) in values.items()), sigma)

    def scaled(self, factor: float) -> "MirrorModulation":
        """Misma modulación con todas las amplitudes multiplicadas por 'factor'"""
        tilts = tuple(MirrorTilt(t.tag, t.frequency, t.amplitude * factor) for t in self.tilts)
        return MirrorModulation(tilts, self.sigma)

    def validate(self, model: StagedModel) -> None:
        unknown = sorted(set(t.tag for t in self.tilts) - set(model.mirror_tags))
        if unknown:
            raise MeterConfigError(f"espejos desconocidos: {', '.join(unknown)}")


@dataclass(frozen=True, eq=False)
class QuadCellSeries:
    """Serie temporal <x>(t); las muestras degeneradas son NaN y quedan marcadas"""

    times: np.ndarray
    x: np.ndarray
    degenerate: np.ndarray = field(default=None)

    @property
    def dt(self) -> float:
        return float(self.times[1] - self.times[0]) if len(self.times) > 1 else 0.0

    @property
    def n_degenerate(self) -> int:
        return int(np.count_nonzero(self.degenerate)) if self.degenerate is not None else 0

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({'t': self.times, 'x': self.x})


def sample_grid(samples: int, duration: float = 1.0) -> np.ndarray:
    """Malla uniforme de 'samples' puntos en [0, duration)"""
    if samples < 2:
        raise ValueError("se necesitan al menos 2 muestras")
    return np.arange(samples) * (duration / samples)


def selection_paths(model: StagedModel, selection: SelectionPair) -> Tuple[PathRecord, ...]:
    """Caminos con amplitud α_p = <post|camino|pre>"""
    post = selection.post_state(model)
    start = {i: a for i, a in enumerate(selection.pre.amplitudes) if a != 0}
    end = {i: np.conj(a) for i, a in enumerate(post.amplitudes) if a != 0}
    return walk_paths(model, start, end)


def path_displacements(paths: Iterable[PathRecord], modulation: MirrorModulation,
                       times: np.ndarray) -> np.ndarray:
    """Matriz (caminos, tiempos) de desplazamientos acumulados d_p(t)"""
    paths = tuple(paths)
    displacements = np.zeros((len(paths), len(times)))
    for tilt in modulation.tilts:
        signal = tilt.displacement(times)
        for p, path in enumerate(paths):
            hits = path.mirrors.count(tilt.tag)
            if hits:
                displacements[p] += hits * signal
    return displacements


def quad_cell_series(model: StagedModel, selection: SelectionPair,
                     modulation: MirrorModulation, times: Iterable[float]) -> QuadCellSeries:
    """
    Señal exacta del detector de cuatro cuadrantes

    Args:
        model: Modelo compilado
        selection: Pre/post-selección
        modulation: Espejos modulados
        times: Instantes de muestreo

    Returns:
        QuadCellSeries con <x>(t)
    """
    modulation.validate(model)
    times = np.asarray(times, dtype=float)
    paths = selection_paths(model, selection)
    alphas = np.array([path.amplitude for path in paths], dtype=complex)
    d = path_displacements(paths, modulation, times)

    weights = (np.conj(alphas)[:, None] * alphas[None, :])[:, :, None]
    gap = d[:, None, :] - d[None, :, :]
    overlaps = np.exp(-gap ** 2 / (8 * modulation.sigma ** 2))
    centers = (d[:, None, :] + d[None, :, :]) / 2

    numerator = np.real(np.sum(weights * centers * overlaps, axis=(0, 1)))
    denominator = np.real(np.sum(weights * overlaps, axis=(0, 1)))

    degenerate = np.abs(denominator) <= DEGENERATE_NORM
    x = np.full(times.shape, np.nan)
    np.divide(numerator, denominator, out=x, where=~degenerate)

    if degenerate.any():
        logger.warning(f"⚠️ {int(degenerate.sum())} muestras con post-selección degenerada")
    return QuadCellSeries(times=times, x=x, degenerate=degenerate)


def linear_response_series(model: StagedModel, selection: SelectionPair,
                           modulation: MirrorModulation, times: Iterable[float]) -> QuadCellSeries:
    """
    Aproximación lineal Σ_j δ_j sin(2π f_j t) Re(P_j)_w

    El valor débil de cada espejo se toma sobre su brazo de entrada.
    """
    modulation.validate(model)
    times = np.asarray(times, dtype=float)
    engine = TwoStateVector(model, selection)

    x = np.zeros(times.shape)
    for tilt in modulation.tilts:
        boundary, arm = model.mirror_boundary(tilt.tag)
        x += tilt.displacement(times) * engine.weak_value(ArmSet([arm], boundary)).real
    return QuadCellSeries(times=times, x=x, degenerate=np.zeros(times.shape, dtype=bool))


def mirror_weak_values(model: StagedModel, selection: SelectionPair) -> Dict[str, complex]:
    """Valor débil del brazo de entrada de cada espejo"""
    engine = TwoStateVector(model, selection)
    values = {}
    for tag in model.mirror_tags:
        boundary, arm = model.mirror_boundary(tag)
        values[tag] = engine.weak_value(ArmSet([arm], boundary))
    return values
