"""
Barrido de fuga
===============
Aplica marcadores idénticos de intensidad ε en todos los brazos indicados,
mide la traza de cada uno tras la post-selección y ajusta el exponente de
escala por brazo. Los brazos internos dejan trazas de orden ε; los brazos que
entran y salen del interferómetro interno sólo reciben la fuga de orden ε².

Proyecto: Weak Trace Simulator
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple
import logging

import numpy as np
import pandas as pd
from tqdm import tqdm

from circuit import StagedModel
from meters import MarkerSet, attach_markers, trace_magnitude
from tsvf import SelectionPair

from .fitting import PowerLawFit, fit_power_law

logger = logging.getLogger(__name__)

DEFAULT_EPSILONS = (1e-4, 2e-4, 5e-4, 1e-3, 2e-3, 5e-3, 1e-2)
DEFAULT_ARMS = ('A', 'B', 'C', 'E', 'F')


@dataclass
class SweepResult:
    """Trazas (ε, magnitud) de un brazo y sus ajustes de ley de potencia"""

    arm: str
    epsilons: List[float] = field(default_factory=list)
    traces: List[float] = field(default_factory=list)
    fit: Optional[PowerLawFit] = None
    probability_fit: Optional[PowerLawFit] = None

    @property
    def points(self) -> List[Tuple[float, float]]:
        return list(zip(self.epsilons, self.traces))

    @property
    def exponent(self) -> float:
        return self.fit.exponent if self.fit else float('nan')

    @property
    def r_squared(self) -> float:
        return self.fit.r_squared if self.fit else float('nan')

    def fit_exponents(self) -> None:
        """Ajusta magnitud y probabilidad (si todas las trazas son positivas)"""
        if len(self.traces) >= 3 and all(t > 0 for t in self.traces):
            self.fit = fit_power_law(self.points)
            self.probability_fit = fit_power_law((e, t ** 2) for e, t in self.points)
        else:
            logger.warning(f"⚠️ Brazo {self.arm}: trazas nulas, no se ajusta el exponente")


@dataclass
class LeakageSweep:
    """Resultados del barrido completo"""

    epsilons: Tuple[float, ...]
    results: Dict[str, SweepResult]
    ratios: Dict[str, List[float]] = field(default_factory=dict)

    def __getitem__(self, arm: str) -> SweepResult:
        return self.results[arm]

    def exponents(self) -> Dict[str, dict]:
        summary = {}
        for arm, result in self.results.items():
            summary[arm] = {
                'exponent': result.exponent,
                'r_squared': result.r_squared,
                'probability_exponent': (result.probability_fit.exponent
                                         if result.probability_fit else float('nan')),
            }
        return summary

    def to_frame(self) -> pd.DataFrame:
        """Tabla larga (arm, epsilon, trace, trace_probability)"""
        rows = [
            {'arm': arm, 'epsilon': eps, 'trace': trace, 'trace_probability': trace ** 2}
            for arm, result in self.results.items()
            for eps, trace in result.points
        ]
        return pd.DataFrame(rows, columns=['arm', 'epsilon', 'trace', 'trace_probability'])


def check_epsilons(epsilons: Sequence[float]) -> Tuple[float, ...]:
    """
    Valida la lista de ε (positivos y estrictamente crecientes)

    Raises:
        ValueError: Si la lista está vacía, no es creciente o tiene valores no positivos
    """
    values = tuple(float(e) for e in epsilons)
    if not values:
        raise ValueError("la lista de ε está vacía")
    if any(not 0 < e <= np.pi / 2 for e in values):
        raise ValueError("los valores de ε deben estar en (0, π/2]")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError("los valores de ε deben ser estrictamente crecientes")
    return values


def leakage_sweep(model: StagedModel, selection: SelectionPair,
                  epsilons: Sequence[float] = DEFAULT_EPSILONS,
                  arms: Sequence[str] = DEFAULT_ARMS,
                  ratio_pairs: Sequence[Tuple[str, str]] = (('F', 'B'),),
                  progress: bool = False) -> LeakageSweep:
    """
    Barrido de trazas con acoplamiento idéntico en todos los brazos

    Args:
        model: Modelo compilado
        selection: Pre/post-selección
        epsilons: Intensidades de acoplamiento (crecientes)
        arms: Brazos marcados
        ratio_pairs: Pares (numerador, denominador) para los cocientes de traza
        progress: Mostrar barra de progreso

    Returns:
        LeakageSweep con trazas, exponentes y cocientes
    """
    epsilons = check_epsilons(epsilons)
    arms = tuple(arms)
    for numerator, denominator in ratio_pairs:
        if numerator not in arms or denominator not in arms:
            raise ValueError(f"cociente {numerator}/{denominator} sobre brazos no marcados")

    results = {arm: SweepResult(arm) for arm in arms}
    for eps in tqdm(epsilons, desc="Barrido ε", disable=not progress):
        joint = attach_markers(model, MarkerSet.identical(arms, eps)).evolve(selection.pre)
        for index, arm in enumerate(arms):
            results[arm].epsilons.append(eps)
            results[arm].traces.append(trace_magnitude(joint, selection.post, index))

    for result in results.values():
        result.fit_exponents()

    ratios = {}
    for numerator, denominator in ratio_pairs:
        ratios[f"{numerator}/{denominator}"] = [
            n / d if d > 0 else float('nan')
            for n, d in zip(results[numerator].traces, results[denominator].traces)
        ]

    sweep = LeakageSweep(epsilons=epsilons, results=results, ratios=ratios)
    logger.info(
        "📊 Exponentes: " + ", ".join(f"{arm}={r.exponent:.3f}" for arm, r in results.items())
    )
    return sweep
