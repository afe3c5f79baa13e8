"""
Enumeración de caminos
Recorre el DAG etapa por etapa acumulando la amplitud de cada rama.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, Mapping, Optional, Tuple
import logging

from .elements import MIRROR

if TYPE_CHECKING:
    from .compiler import StagedModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathRecord:
    """Camino del fotón: brazos recorridos, espejos visitados y amplitud"""

    arms: Tuple[str, ...]
    mirrors: Tuple[str, ...]
    amplitude: complex

    @property
    def label(self) -> str:
        """Etiqueta corta basada en los espejos (p. ej. 'E-B-F')"""
        return "-".join(self.mirrors) if self.mirrors else "-".join(self.arms)


def walk_paths(model: "StagedModel", start: Mapping[int, complex],
               end: Mapping[int, complex]) -> Tuple[PathRecord, ...]:
    """
    Recorre todos los caminos desde las posiciones iniciales

    Args:
        model: Modelo compilado
        start: Posición en la frontera 0 -> amplitud inicial
        end: Posición en la frontera final -> peso conjugado de post-selección

    Returns:
        Caminos con amplitud total no nula, en orden de recorrido
    """
    initial = model.arms_at(0)
    partial: List[Tuple[int, complex, List[str], List[str]]] = [
        (position, complex(amplitude), [initial[position]], [])
        for position, amplitude in start.items() if amplitude != 0
    ]

    for stage in model.stages:
        touched = set(stage.positions)
        expanded = []
        for position, amplitude, arms, mirrors in partial:
            if position not in touched:
                expanded.append((position, amplitude, arms, mirrors))
                continue

            visited = mirrors + [stage.element.tag] if stage.element.kind == MIRROR else mirrors
            for target in stage.positions:
                weight = stage.matrix[target, position]
                if weight == 0:
                    continue
                expanded.append((target, amplitude * weight, arms + [stage.arms_out[target]], visited))
        partial = expanded

    records = []
    for position, amplitude, arms, mirrors in partial:
        weight = end.get(position, 0)
        if weight == 0:
            continue
        records.append(PathRecord(arms=tuple(arms), mirrors=tuple(mirrors),
                                  amplitude=complex(amplitude * weight)))
    return tuple(records)


def enumerate_paths(model: "StagedModel", detector: Optional[str] = None) -> Tuple[PathRecord, ...]:
    """
    Enumera los caminos fuente -> detector con su amplitud compleja

    Args:
        model: Modelo compilado
        detector: Brazo detector (por defecto el primero declarado)

    Returns:
        Tabla de caminos; los puertos de vacío nunca aparecen
    """
    detector = detector or model.detect_arms[0]
    start = {model.index_of(model.source_arm, 0): 1.0}
    end = {model.index_of(detector, model.final_boundary): 1.0}
    paths = walk_paths(model, start, end)
    logger.debug(f"{len(paths)} caminos hacia {detector}")
    return paths


def path_sum(paths: Tuple[PathRecord, ...]) -> complex:
    """Suma coherente de las amplitudes de una tabla de caminos"""
    return complex(sum(path.amplitude for path in paths))
