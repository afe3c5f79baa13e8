"""
Escenarios
==========
Un escenario es un archivo TOML con los parámetros de ejecución; el circuito
se mantiene en su archivo DSL. La ruta del circuito es relativa al archivo
del escenario.

Requiere Python 3.11 o superior (tomllib).

Proyecto: Weak Trace Simulator
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple
import hashlib
import logging
import tomllib

import numpy as np

from circuit import StagedModel, compile_circuit, parse_circuit
from tsvf import ArmSet, PathState, SelectionPair

logger = logging.getLogger(__name__)

SEED_LIMIT = 2 ** 64


class ScenarioError(ValueError):
    """Escenario inválido o incompatible con el comando"""


def parse_seed(value: Any) -> int:
    """Semilla entera sin signo de 64 bits"""
    try:
        seed = int(value)
    except (TypeError, ValueError):
        raise ScenarioError(f"semilla inválida: {value!r}") from None
    if isinstance(value, float) or not 0 <= seed < SEED_LIMIT:
        raise ScenarioError(f"la semilla debe ser un entero en [0, 2^64): {value!r}")
    return seed


def parse_amplitude(value: Any) -> complex:
    """Número real o par [re, im]"""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, (int, float)) for v in value):
        return complex(value[0], value[1])
    raise ScenarioError(f"amplitud inválida: {value!r}")


def parse_arm_set(entry: Any) -> ArmSet:
    """Lista de brazos o tabla {arms = [...], stage = k}"""
    if isinstance(entry, str):
        return ArmSet([entry])
    if isinstance(entry, list) and entry and all(isinstance(a, str) for a in entry):
        return ArmSet(entry)
    if isinstance(entry, dict) and 'arms' in entry:
        stage = entry.get('stage')
        if stage is not None and not isinstance(stage, int):
            raise ScenarioError(f"etapa inválida: {stage!r}")
        return ArmSet(parse_arm_set(entry['arms']).arms, stage)
    raise ScenarioError(f"conjunto de brazos inválido: {entry!r}")


@dataclass
class Scenario:
    """Escenario cargado: datos TOML, circuito y semilla"""

    path: Optional[Path]
    data: Dict[str, Any]
    circuit_path: Path
    raw: bytes = b""
    circuit_text: str = ""
    seed: Optional[int] = None
    output_dir: Optional[Path] = None
    _model: Optional[StagedModel] = field(default=None, repr=False)

    # ==================== CIRCUITO Y SELECCIÓN ====================

    @property
    def model(self) -> StagedModel:
        if self._model is None:
            self._model = compile_circuit(parse_circuit(self.circuit_text))
        return self._model

    def section(self, name: str) -> Dict[str, Any]:
        """
        Bloque del escenario requerido por un comando

        Raises:
            ScenarioError: Si el bloque no existe o no es una tabla
        """
        block = self.data.get(name)
        if not isinstance(block, dict):
            raise ScenarioError(f"el escenario no tiene el bloque [{name}]")
        return block

    def _state(self, values: Mapping[str, Any], boundary: int) -> PathState:
        if not isinstance(values, dict):
            raise ScenarioError(f"estado inválido, se esperaba una tabla brazo = amplitud: {values!r}")
        amplitudes = {arm: parse_amplitude(v) for arm, v in values.items()}
        return PathState.from_mapping(self.model.arms_at(boundary), amplitudes, boundary)

    def selection(self) -> SelectionPair:
        """Pre/post-selección del bloque [selection] (por defecto fuente -> primer detector)"""
        block = self.data.get('selection', {})
        if not isinstance(block, dict):
            raise ScenarioError("[selection] debe ser una tabla")
        model = self.model

        pre = self._state(block['pre'], 0) if 'pre' in block else None
        if 'post' in block and 'detector' in block:
            raise ScenarioError("[selection] admite 'detector' o 'post', no ambos")
        if 'post' in block:
            post = self._state(block['post'], model.final_boundary)
            return SelectionPair(pre=pre or SelectionPair.for_model(model).pre, post=post)

        detector = block.get('detector')
        if detector is not None and detector not in model.detect_arms:
            raise ScenarioError(f"detector no declarado en el circuito: {detector}")
        return SelectionPair.for_model(model, detector=detector, pre=pre)

    # ==================== HASH ====================

    def digest(self, command: str, seed: Optional[int]) -> str:
        """SHA-256 de escenario, circuito, comando y semilla"""
        h = hashlib.sha256()
        for part in (self.raw, self.circuit_text.encode('utf-8'), command.encode('utf-8'),
                     str(seed).encode('utf-8')):
            h.update(len(part).to_bytes(8, 'big'))
            h.update(part)
        return h.hexdigest()


def load_scenario(path: Optional[Path] = None, circuit: Optional[Path] = None) -> Scenario:
    """
    Carga un escenario TOML y su circuito

    Args:
        path: Archivo del escenario (opcional si se da el circuito)
        circuit: Circuito que reemplaza al declarado en el escenario

    Returns:
        Scenario

    Raises:
        ScenarioError: Si el contenido es inválido
        OSError: Si algún archivo no puede leerse
    """
    raw, data = b"", {}
    if path is not None:
        path = Path(path)
        raw = path.read_bytes()
        try:
            data = tomllib.loads(raw.decode('utf-8'))
        except (tomllib.TOMLDecodeError, UnicodeDecodeError) as e:
            raise ScenarioError(f"{path}: {e}") from None

    if circuit is not None:
        circuit_path = Path(circuit)
    elif isinstance(data.get('circuit'), str):
        circuit_path = path.parent / data['circuit']
    else:
        raise ScenarioError("no se indicó circuito (--circuit o clave 'circuit')")

    circuit_text = circuit_path.read_text(encoding='utf-8')
    seed = parse_seed(data['seed']) if 'seed' in data else None
    output_block = data.get('output', {})
    if not isinstance(output_block, dict):
        raise ScenarioError("[output] debe ser una tabla")
    output = output_block.get('dir')
    if output is not None and not isinstance(output, str):
        raise ScenarioError(f"[output] dir debe ser una ruta: {output!r}")

    scenario = Scenario(
        path=path,
        data=data,
        circuit_path=circuit_path,
        raw=raw,
        circuit_text=circuit_text,
        seed=seed,
        output_dir=Path(output) if output else None,
    )
    logger.info(f"📁 Escenario cargado: {path or '(sin escenario)'} con circuito {circuit_path.name}")
    return scenario


def arm_sets(entries: List[Any]) -> List[ArmSet]:
    """Lista de conjuntos de brazos de un bloque"""
    if not isinstance(entries, list) or not entries:
        raise ScenarioError("se esperaba una lista no vacía de conjuntos de brazos")
    return [parse_arm_set(entry) for entry in entries]


def float_list(values: Any, what: str) -> Tuple[float, ...]:
    if not isinstance(values, list) or not values:
        raise ScenarioError(f"'{what}' debe ser una lista no vacía de números")
    try:
        return tuple(float(v) for v in values)
    except (TypeError, ValueError):
        raise ScenarioError(f"'{what}' contiene valores no numéricos") from None


def finite(value: Any, what: str) -> float:
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ScenarioError(f"'{what}' debe ser numérico: {value!r}") from None
    if not np.isfinite(number):
        raise ScenarioError(f"'{what}' no es finito")
    return number
