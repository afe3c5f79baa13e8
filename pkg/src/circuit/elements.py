"""
Elementos ópticos y especificación de circuitos
================================================
Tipos inmutables que describen un interferómetro: divisores de haz,
espejos y desfasadores conectados por brazos etiquetados.

Proyecto: Weak Trace Simulator
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple
import logging

import numpy as np

from .errors import (
    CircuitError,
    CycleError,
    DuplicateConsumerError,
    DuplicateProducerError,
    MissingDeclarationError,
    UnknownArmError,
)

logger = logging.getLogger(__name__)

# ==================== CONSTANTES ====================

BEAMSPLITTER = "beamsplitter"
MIRROR = "mirror"
PHASESHIFT = "phaseshift"

ELEMENT_KINDS = (BEAMSPLITTER, MIRROR, PHASESHIFT)

# Puerto de entrada sin uso (vacío)
VACUUM = "_"


def vacuum_label(element_name: str, port: int) -> str:
    """
    Etiqueta del brazo de vacío creado para un puerto sin uso

    Args:
        element_name: Nombre del divisor de haz
        port: Índice del puerto (1 o 2)

    Returns:
        Etiqueta única (no colisiona con identificadores del DSL)
    """
    return f"{element_name}.vac{port}"


# ==================== TIPOS ====================

@dataclass(frozen=True)
class Element:
    """Elemento óptico del circuito"""

    kind: str
    name: str
    inputs: Tuple[str, ...]
    outputs: Tuple[str, ...]
    theta: float = 0.0
    phi: float = 0.0
    value: float = 0.0
    line: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in ELEMENT_KINDS:
            raise CircuitError(f"tipo de elemento desconocido '{self.kind}'", line=self.line)

        expected = 2 if self.kind == BEAMSPLITTER else 1
        if len(self.inputs) != expected or len(self.outputs) != expected:
            raise CircuitError(
                f"{self.kind} '{self.name}' requiere {expected} entrada(s) y {expected} salida(s)",
                line=self.line
            )

        if VACUUM in self.outputs:
            raise CircuitError(f"'{self.name}': una salida no puede ser vacío", line=self.line)

        if self.kind != BEAMSPLITTER and VACUUM in self.inputs:
            raise CircuitError(f"'{self.name}': solo un beamsplitter admite puertos vacíos", line=self.line)

        labels = [arm for arm in self.inputs if arm != VACUUM] + list(self.outputs)
        if len(set(labels)) != len(labels):
            raise CircuitError(f"'{self.name}': brazos repetidos en el elemento", line=self.line)

    @property
    def tag(self) -> str:
        """Etiqueta del espejo (coincide con su nombre)"""
        return self.name

    def local_matrix(self) -> np.ndarray:
        """
        Matriz unitaria local del elemento

        El beamsplitter actúa sobre (entrada1, entrada2) como
        [[cosθ, e^{iφ} sinθ], [−e^{−iφ} sinθ, cosθ]]; el espejo es la
        identidad y el desfasador una fase e^{i·value}.

        Returns:
            Matriz compleja de 2x2 o 1x1
        """
        if self.kind == BEAMSPLITTER:
            c, s = np.cos(self.theta), np.sin(self.theta)
            return np.array([
                [c, np.exp(1j * self.phi) * s],
                [-np.exp(-1j * self.phi) * s, c]
            ], dtype=complex)

        if self.kind == PHASESHIFT:
            return np.array([[np.exp(1j * self.value)]], dtype=complex)

        return np.eye(1, dtype=complex)


@dataclass(frozen=True)
class CircuitSpec:
    """Descripción validada de un interferómetro (elementos en orden topológico)"""

    elements: Tuple[Element, ...]
    source_arm: str
    detect_arms: Tuple[str, ...]

    @property
    def detect_arm(self) -> str:
        """Detector principal (primera declaración detect)"""
        return self.detect_arms[0]

    @property
    def mirrors(self) -> Tuple[Element, ...]:
        return tuple(e for e in self.elements if e.kind == MIRROR)

    @property
    def beamsplitters(self) -> Tuple[Element, ...]:
        return tuple(e for e in self.elements if e.kind == BEAMSPLITTER)

    def element(self, name: str) -> Element:
        for item in self.elements:
            if item.name == name:
                return item
        raise KeyError(name)


# ==================== VALIDACIÓN ====================

def build_spec(elements: Sequence[Element], source_arms: Sequence[str],
               detect_arms: Sequence[str]) -> CircuitSpec:
    """
    Valida los elementos y construye un CircuitSpec en orden topológico

    Args:
        elements: Elementos en el orden en que fueron declarados
        source_arms: Brazos declarados como source (debe haber exactamente uno)
        detect_arms: Brazos declarados como detect (al menos uno)

    Returns:
        CircuitSpec validado

    Raises:
        CircuitError: Si se viola cualquier invariante del circuito
    """
    if len(source_arms) != 1:
        raise MissingDeclarationError(
            f"se requiere exactamente una declaración source (encontradas: {len(source_arms)})"
        )
    if not detect_arms:
        raise MissingDeclarationError("se requiere al menos una declaración detect")

    source = source_arms[0]

    names = set()
    producers: Dict[str, Element] = {}
    consumers: Dict[str, Element] = {}

    for element in elements:
        if element.name in names:
            raise CircuitError(f"nombre de elemento duplicado '{element.name}'", line=element.line)
        names.add(element.name)

        for arm in element.outputs:
            if arm == source or arm in producers:
                raise DuplicateProducerError(arm, line=element.line)
            producers[arm] = element

    for element in elements:
        for arm in element.inputs:
            if arm == VACUUM:
                continue
            if arm != source and arm not in producers:
                raise UnknownArmError(arm, line=element.line)
            if arm in consumers:
                raise DuplicateConsumerError(arm, line=element.line)
            consumers[arm] = element

    seen_detect = set()
    for arm in detect_arms:
        if arm != source and arm not in producers:
            raise UnknownArmError(arm)
        if arm in consumers:
            raise CircuitError(f"el detector '{arm}' no es un brazo terminal")
        if arm in seen_detect:
            raise CircuitError(f"detector '{arm}' declarado dos veces")
        seen_detect.add(arm)

    ordered = _topological_order(list(elements), producers)
    logger.debug(f"Circuito validado: {len(ordered)} elementos, source={source}")

    return CircuitSpec(elements=tuple(ordered), source_arm=source, detect_arms=tuple(detect_arms))


def _topological_order(elements: List[Element], producers: Dict[str, Element]) -> List[Element]:
    """Orden de Kahn estable respecto al orden de declaración"""
    pending = list(elements)
    available = set()
    ordered: List[Element] = []

    while pending:
        for index, element in enumerate(pending):
            ready = all(
                arm == VACUUM or arm not in producers or arm in available
                for arm in element.inputs
            )
            if ready:
                ordered.append(element)
                available.update(element.outputs)
                del pending[index]
                break
        else:
            raise CycleError([e.name for e in pending])

    return ordered
