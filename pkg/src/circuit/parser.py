"""
Parser del DSL de interferómetros
==================================
Lee la descripción línea a línea del circuito y produce un CircuitSpec
validado. Gramática (comentarios con '#', identificadores sensibles a
mayúsculas):

    source arm=<id>
    beamsplitter <name> in=<id>,<id> out=<id>,<id> theta=<float> phi=<float>
    mirror <name> arm_in=<id> arm_out=<id>
    phaseshift <name> arm_in=<id> arm_out=<id> value=<float>
    detect arm=<id>

Un puerto de entrada '_' en un beamsplitter es un puerto vacío.

Proyecto: Weak Trace Simulator
"""

import math
import re
from pathlib import Path
from typing import Dict, List, Tuple, Union
import logging

from .elements import (
    BEAMSPLITTER,
    MIRROR,
    PHASESHIFT,
    VACUUM,
    CircuitSpec,
    Element,
    build_spec,
)
from .errors import CircuitSyntaxError

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_']*\Z")
TOKEN = re.compile(r"\S+")

# Claves requeridas por cada sentencia (el orden es libre)
STATEMENT_KEYS = {
    "source": ("arm",),
    "detect": ("arm",),
    BEAMSPLITTER: ("in", "out", "theta", "phi"),
    MIRROR: ("arm_in", "arm_out"),
    PHASESHIFT: ("arm_in", "arm_out", "value"),
}


class CircuitParser:
    """Parser del DSL de circuitos"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def parse(self, text: str) -> CircuitSpec:
        """
        Analiza el texto del DSL

        Args:
            text: Código fuente del circuito

        Returns:
            CircuitSpec validado

        Raises:
            CircuitError: Error de sintaxis o de validación
        """
        elements: List[Element] = []
        sources: List[str] = []
        detects: List[str] = []

        for line_number, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.split("#", 1)[0]
            tokens = [(m.group(0), m.start() + 1) for m in TOKEN.finditer(line)]
            if not tokens:
                continue

            keyword, column = tokens[0]
            if keyword not in STATEMENT_KEYS:
                raise CircuitSyntaxError(f"sentencia desconocida '{keyword}'", line_number, column)

            if keyword in ("source", "detect"):
                fields = self._key_values(tokens[1:], keyword, line_number)
                arm = self._identifier(fields["arm"], line_number)
                (sources if keyword == "source" else detects).append(arm)
                continue

            if len(tokens) < 2:
                raise CircuitSyntaxError(f"falta el nombre del {keyword}", line_number, len(line) + 1)

            name_token = tokens[1]
            name = self._identifier(name_token, line_number)
            fields = self._key_values(tokens[2:], keyword, line_number)
            elements.append(self._element(keyword, name, fields, line_number))

        spec = build_spec(elements, sources, detects)
        self.logger.info(
            f"✅ Circuito analizado: {len(spec.beamsplitters)} beamsplitters, "
            f"{len(spec.mirrors)} espejos"
        )
        return spec

    def _element(self, keyword: str, name: str, fields: Dict[str, Tuple[str, int]],
                 line_number: int) -> Element:
        """Construye un Element a partir de los pares clave=valor"""
        if keyword == BEAMSPLITTER:
            inputs = self._arm_pair(fields["in"], line_number, allow_vacuum=True)
            outputs = self._arm_pair(fields["out"], line_number, allow_vacuum=False)
            return Element(
                kind=BEAMSPLITTER,
                name=name,
                inputs=inputs,
                outputs=outputs,
                theta=self._number(fields["theta"], line_number),
                phi=self._number(fields["phi"], line_number),
                line=line_number,
            )

        arm_in = self._identifier(fields["arm_in"], line_number)
        arm_out = self._identifier(fields["arm_out"], line_number)
        value = self._number(fields["value"], line_number) if keyword == PHASESHIFT else 0.0
        return Element(
            kind=keyword,
            name=name,
            inputs=(arm_in,),
            outputs=(arm_out,),
            value=value,
            line=line_number,
        )

    def _key_values(self, tokens: List[Tuple[str, int]], keyword: str,
                    line_number: int) -> Dict[str, Tuple[str, int]]:
        """Separa los tokens clave=valor y verifica el conjunto de claves"""
        expected = STATEMENT_KEYS[keyword]
        fields: Dict[str, Tuple[str, int]] = {}

        for token, column in tokens:
            key, sep, value = token.partition("=")
            if not sep or not value:
                raise CircuitSyntaxError(f"se esperaba clave=valor, encontrado '{token}'", line_number, column)
            if key not in expected:
                raise CircuitSyntaxError(f"clave '{key}' no válida para {keyword}", line_number, column)
            if key in fields:
                raise CircuitSyntaxError(f"clave '{key}' repetida", line_number, column)
            fields[key] = (value, column + len(key) + 1)

        missing = [key for key in expected if key not in fields]
        if missing:
            end_column = tokens[-1][1] + len(tokens[-1][0]) if tokens else 1
            raise CircuitSyntaxError(
                f"faltan claves para {keyword}: {', '.join(missing)}", line_number, end_column
            )
        return fields

    @staticmethod
    def _identifier(item: Tuple[str, int], line_number: int) -> str:
        text, column = item
        if not IDENTIFIER.match(text):
            raise CircuitSyntaxError(f"identificador inválido '{text}'", line_number, column)
        return text

    def _arm_pair(self, item: Tuple[str, int], line_number: int,
                  allow_vacuum: bool) -> Tuple[str, str]:
        text, column = item
        parts = text.split(",")
        if len(parts) != 2:
            raise CircuitSyntaxError(f"se esperaban dos brazos, encontrado '{text}'", line_number, column)

        arms = []
        offset = column
        for part in parts:
            if allow_vacuum and part == VACUUM:
                arms.append(VACUUM)
            else:
                arms.append(self._identifier((part, offset), line_number))
            offset += len(part) + 1
        return arms[0], arms[1]

    @staticmethod
    def _number(item: Tuple[str, int], line_number: int) -> float:
        text, column = item
        try:
            number = float(text)
        except ValueError:
            raise CircuitSyntaxError(f"número inválido '{text}'", line_number, column) from None
        if not math.isfinite(number):
            raise CircuitSyntaxError(f"número no finito '{text}'", line_number, column)
        return number


# ==================== FUNCIONES DE UTILIDAD ====================

def parse_circuit(text: str) -> CircuitSpec:
    """
    Analiza el DSL y devuelve un CircuitSpec validado

    Args:
        text: Código fuente del circuito

    Returns:
        CircuitSpec
    """
    return CircuitParser().parse(text)


def load_circuit(path: Union[str, Path]) -> CircuitSpec:
    """
    Carga un circuito desde archivo (.circ, UTF-8)

    Args:
        path: Ruta del archivo

    Returns:
        CircuitSpec validado
    """
    path = Path(path)
    logger.info(f"📁 Cargando circuito: {path}")
    return parse_circuit(path.read_text(encoding="utf-8"))


def format_circuit(spec: CircuitSpec) -> str:
    """
    Escribe un CircuitSpec en el DSL (parse(format(spec)) reproduce el spec)

    Args:
        spec: Circuito validado

    Returns:
        Texto del DSL
    """
    lines = [f"source arm={spec.source_arm}"]

    for element in spec.elements:
        if element.kind == BEAMSPLITTER:
            lines.append(
                f"beamsplitter {element.name} in={','.join(element.inputs)} "
                f"out={','.join(element.outputs)} theta={element.theta!r} phi={element.phi!r}"
            )
        elif element.kind == MIRROR:
            lines.append(f"mirror {element.name} arm_in={element.inputs[0]} arm_out={element.outputs[0]}")
        else:
            lines.append(
                f"phaseshift {element.name} arm_in={element.inputs[0]} "
                f"arm_out={element.outputs[0]} value={element.value!r}"
            )

    lines.extend(f"detect arm={arm}" for arm in spec.detect_arms)
    return "\n".join(lines) + "\n"
