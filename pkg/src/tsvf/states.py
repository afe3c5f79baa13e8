"""
Estados de camino, pares de selección y conjuntos de brazos
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Union

import numpy as np

from circuit import StagedModel

from .errors import SelectionError

NORM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class PathState:
    """Vector de amplitudes sobre las etiquetas vivas de una frontera"""

    arms: tuple
    amplitudes: np.ndarray
    boundary: int = 0

    def __post_init__(self):
        amplitudes = np.asarray(self.amplitudes, dtype=complex).copy()
        if amplitudes.shape != (len(self.arms),):
            raise SelectionError(
                f"dimensión incompatible: {amplitudes.shape} para {len(self.arms)} brazos"
            )
        if not np.all(np.isfinite(amplitudes)):
            raise SelectionError("amplitudes no finitas")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def basis(cls, arms: Iterable[str], arm: str, boundary: int = 0) -> "PathState":
        """Estado con amplitud 1 en un único brazo"""
        arms = tuple(arms)
        if arm not in arms:
            raise SelectionError(f"el brazo '{arm}' no está vivo en la frontera {boundary}")
        vector = np.zeros(len(arms), dtype=complex)
        vector[arms.index(arm)] = 1.0
        return cls(arms=arms, amplitudes=vector, boundary=boundary)

    @classmethod
    def from_mapping(cls, arms: Iterable[str], values: Mapping[str, complex],
                     boundary: int = 0) -> "PathState":
        """Estado a partir de un diccionario brazo -> amplitud (resto en cero)"""
        arms = tuple(arms)
        unknown = [arm for arm in values if arm not in arms]
        if unknown:
            raise SelectionError(f"brazos no vivos en la frontera {boundary}: {', '.join(unknown)}")
        vector = np.array([complex(values.get(arm, 0)) for arm in arms])
        return cls(arms=arms, amplitudes=vector, boundary=boundary)

    def __getitem__(self, arm: str) -> complex:
        return complex(self.amplitudes[self.arms.index(arm)])

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "PathState":
        norm = self.norm()
        if norm == 0:
            raise SelectionError("no se puede normalizar un estado nulo")
        return PathState(self.arms, self.amplitudes / norm, self.boundary)

    def inner(self, other: "PathState") -> complex:
        """<self|other>"""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def as_dict(self) -> Dict[str, complex]:
        return {arm: complex(a) for arm, a in zip(self.arms, self.amplitudes)}

    def equals_up_to_phase(self, other: "PathState", tol: float = 1e-12) -> bool:
        """Compara dos estados salvo una fase global"""
        if self.arms != other.arms:
            return False
        overlap = np.vdot(other.amplitudes, self.amplitudes)
        phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
        return bool(np.max(np.abs(self.amplitudes - phase * other.amplitudes)) <= tol)


@dataclass(frozen=True)
class ArmSet:
    """Conjunto de brazos vivos en una frontera (None = primera frontera posible)"""

    arms: FrozenSet[str]
    stage: Optional[int] = None

    def __init__(self, arms: Iterable[str], stage: Optional[int] = None):
        object.__setattr__(self, "arms", frozenset(arms))
        object.__setattr__(self, "stage", stage)

    def resolve(self, model: StagedModel) -> int:
        """Frontera efectiva del conjunto"""
        return model.boundary_of(self.arms) if self.stage is None else self.stage

    def __str__(self) -> str:
        return "{" + ",".join(sorted(self.arms)) + "}"


Post = Union[str, PathState]


@dataclass(frozen=True)
class SelectionPair:
    """Estado pre-seleccionado (frontera 0) y post-selección (detector o estado final)"""

    pre: PathState
    post: Post

    @classmethod
    def for_model(cls, model: StagedModel, detector: Optional[str] = None,
                  pre: Optional[PathState] = None) -> "SelectionPair":
        """
        Selección estándar: fotón en la fuente y detección en el detector

        Args:
            model: Modelo compilado
            detector: Detector de post-selección (por defecto el principal)
            pre: Estado inicial alternativo

        Returns:
            SelectionPair
        """
        pre = pre or PathState.basis(model.arms_at(0), model.source_arm, 0)
        return cls(pre=pre, post=detector or model.detect_arms[0])

    def post_state(self, model: StagedModel) -> PathState:
        """Post-selección como vector en la frontera final"""
        final = model.final_boundary
        if isinstance(self.post, str):
            if self.post not in model.detect_arms and self.post not in model.arms_at(final):
                raise SelectionError(f"detector desconocido '{self.post}'")
            return PathState.basis(model.arms_at(final), self.post, final)
        return self.post

    @property
    def detector(self) -> Optional[str]:
        return self.post if isinstance(self.post, str) else None


def check_unit(state: PathState, what: str) -> None:
    """Verifica que un estado tenga norma 1"""
    if abs(state.norm() - 1.0) > NORM_TOL:
        raise SelectionError(f"{what} debe tener norma 1 (norma = {state.norm():.12f})")
