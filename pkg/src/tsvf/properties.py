"""
Pruebas de propiedades aleatorizadas
=====================================
Genera instancias aleatorias (semilla fija) sobre cadenas de divisores de
haz de dimensión 3-8 y verifica la aditividad de los valores débiles y el
teorema de certeza: si un proyector se encuentra con certeza en una medición
fuerte, su valor débil coincide con ese autovalor.

Proyecto: Weak Trace Simulator
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple
import logging

import numpy as np

from circuit import StagedModel, compile_circuit, parse_circuit

from .engine import TwoStateVector
from .states import ArmSet, PathState, SelectionPair

logger = logging.getLogger(__name__)

# Instancias con |<φ|ψ>| menor a este valor se vuelven a sortear
MIN_OVERLAP = 0.05


@dataclass
class PropertyReport:
    """Resultado de una batería de instancias aleatorias"""

    name: str
    instances: int = 0
    failures: int = 0
    max_error: float = 0.0
    tolerance: float = 0.0
    dimensions: Dict[int, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.instances > 0 and self.failures == 0

    def record(self, dimension: int, error: float) -> None:
        self.instances += 1
        self.dimensions[dimension] = self.dimensions.get(dimension, 0) + 1
        self.max_error = max(self.max_error, error)
        if not error <= self.tolerance:
            self.failures += 1

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'instances': self.instances,
            'failures': self.failures,
            'max_error': self.max_error,
            'tolerance': self.tolerance,
            'passed': self.passed,
            'dimensions': {str(k): v for k, v in sorted(self.dimensions.items())},
        }


def random_chain_model(rng: np.random.Generator, dimension: int) -> StagedModel:
    """
    Cadena de divisores con ángulos aleatorios y 'dimension' brazos vivos

    Args:
        rng: Generador de números aleatorios
        dimension: Número de brazos (>= 2)

    Returns:
        Modelo compilado
    """
    lines = ["source arm=x0"]
    for k in range(1, dimension):
        theta, phi = rng.uniform(0.1, np.pi / 2 - 0.1), rng.uniform(-np.pi, np.pi)
        lines.append(
            f"beamsplitter BS{k} in=x{k - 1},_ out=o{k},x{k} theta={theta!r} phi={phi!r}"
        )
    lines.append(f"detect arm=x{dimension - 1}")
    return compile_circuit(parse_circuit("\n".join(lines)))


def random_state(rng: np.random.Generator, arms: Tuple[str, ...], boundary: int) -> PathState:
    vector = rng.normal(size=len(arms)) + 1j * rng.normal(size=len(arms))
    return PathState(arms, vector / np.linalg.norm(vector), boundary)


def random_subset(rng: np.random.Generator, arms: Tuple[str, ...], size: int) -> List[str]:
    return [arms[i] for i in sorted(rng.choice(len(arms), size=size, replace=False))]


class PropertySuite:
    """Baterías aleatorizadas reproducibles a partir de una semilla"""

    def __init__(self, seed: int, dimensions: Tuple[int, ...] = (3, 4, 5, 6, 7, 8)):
        self.seed = seed
        self.dimensions = dimensions
        self.logger = logging.getLogger(__name__)
        self._models: Dict[Tuple[int, int], StagedModel] = {}

    def _model(self, rng: np.random.Generator, dimension: int, variant: int) -> StagedModel:
        key = (dimension, variant)
        if key not in self._models:
            self._models[key] = random_chain_model(rng, dimension)
        return self._models[key]

    def additivity(self, instances: int = 1000, tolerance: float = 1e-12) -> PropertyReport:
        """
        (P_S∪T)_w = (P_S)_w + (P_T)_w para conjuntos disjuntos S, T

        Args:
            instances: Número de instancias aleatorias
            tolerance: Error absoluto admitido

        Returns:
            PropertyReport
        """
        rng = np.random.default_rng(self.seed)
        report = PropertyReport("additivity", tolerance=tolerance)

        while report.instances < instances:
            dimension = int(rng.choice(self.dimensions))
            model = self._model(rng, dimension, report.instances % 4)
            boundary = int(rng.integers(0, model.final_boundary + 1))
            pre = random_state(rng, model.arms_at(0), 0)
            post = random_state(rng, model.arms_at(model.final_boundary), model.final_boundary)
            engine = TwoStateVector(model, SelectionPair(pre=pre, post=post))
            if abs(engine.overlap(boundary)) < MIN_OVERLAP:
                continue

            live = model.arms_at(boundary)
            size_s = int(rng.integers(1, dimension))
            size_t = int(rng.integers(1, dimension - size_s + 1))
            chosen = random_subset(rng, live, size_s + size_t)
            s, t = ArmSet(chosen[:size_s], boundary), ArmSet(chosen[size_s:], boundary)
            union = ArmSet(chosen, boundary)

            error = abs(engine.weak_value(union) - engine.weak_value(s) - engine.weak_value(t))
            report.record(dimension, error)

        self.logger.info(f"📊 Aditividad: {report.instances} instancias, {report.failures} fallos")
        return report

    def certainty(self, instances: int = 1000, tolerance: float = 1e-10) -> Tuple[PropertyReport, PropertyReport]:
        """
        Teorema de certeza con post-estado φ = Pψ'/‖Pψ'‖

        Returns:
            (reporte ABL, reporte de valor débil)
        """
        rng = np.random.default_rng(self.seed + 1)
        abl_report = PropertyReport("certainty_abl", tolerance=tolerance)
        weak_report = PropertyReport("certainty_weak_value", tolerance=tolerance)

        while abl_report.instances < instances:
            dimension = int(rng.choice(self.dimensions))
            model = self._model(rng, dimension, abl_report.instances % 4)
            final = model.final_boundary
            live = model.arms_at(final)

            chosen = random_subset(rng, live, int(rng.integers(1, dimension)))
            mask = np.array([arm in chosen for arm in live])
            other = random_state(rng, live, final)
            projected = np.where(mask, other.amplitudes, 0)
            if np.linalg.norm(projected) < MIN_OVERLAP:
                continue

            pre = random_state(rng, model.arms_at(0), 0)
            post = PathState(live, projected / np.linalg.norm(projected), final)
            engine = TwoStateVector(model, SelectionPair(pre=pre, post=post))
            if abs(engine.overlap(final)) < MIN_OVERLAP:
                continue

            arms = ArmSet(chosen, final)
            complement = ArmSet(set(live) - set(chosen), final)
            probability = engine.abl_probability([arms, complement], 0)
            abl_report.record(dimension, abs(probability - 1.0))
            weak_report.record(dimension, abs(engine.weak_value(arms) - 1.0))

        self.logger.info(
            f"📊 Certeza: {abl_report.instances} instancias, "
            f"{abl_report.failures + weak_report.failures} fallos"
        )
        return abl_report, weak_report
