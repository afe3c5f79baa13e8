"""
Escritura de resultados
Archivos CSV y JSON deterministas con cabecera de versión y hash del escenario
"""

from pathlib import Path
from typing import Any, Dict, List
import json
import logging
import math

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)


def to_jsonable(value: Any) -> Any:
    """Convierte tipos numpy/complejos a JSON; NaN e infinitos pasan a null"""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (complex, np.complexfloating)):
        return {'real': to_jsonable(value.real), 'imag': to_jsonable(value.imag)}
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, Path):
        return value.as_posix()
    return value


class ResultWriter:
    """Escribe los archivos de un comando en un directorio de salida"""

    def __init__(self, out_dir: Path, header: Dict[str, Any], float_format: str = '%.17g',
                 indent: int = 2):
        """
        Args:
            out_dir: Directorio de salida (se crea si no existe)
            header: Campos de cabecera (tool, version, scenario, command, seed)
            float_format: Formato de los reales en CSV
            indent: Sangría de los JSON
        """
        self.out_dir = Path(out_dir)
        self.header = header
        self.float_format = float_format
        self.indent = indent
        self.written: List[Path] = []
        self.logger = logging.getLogger(__name__)

    @property
    def header_line(self) -> str:
        return f"# {self.header['tool']} {self.header['version']} scenario={self.header['scenario']}"

    def _target(self, name: str) -> Path:
        self.out_dir.mkdir(parents=True, exist_ok=True)
        path = self.out_dir / name
        self.written.append(path)
        return path

    def write_csv(self, name: str, frame: pd.DataFrame) -> Path:
        """CSV con una línea de cabecera comentada y una fila de nombres de columna"""
        path = self._target(name)
        body = frame.to_csv(index=False, float_format=self.float_format, lineterminator='\n')
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(self.header_line + '\n')
            f.write(body)
        self.logger.info(f"📁 {path} ({len(frame)} filas)")
        return path

    def write_json(self, name: str, payload: Dict[str, Any]) -> Path:
        """JSON con claves ordenadas y objeto 'header' de primer nivel"""
        path = self._target(name)
        document = to_jsonable({'header': self.header, **payload})
        with open(path, 'w', encoding='utf-8', newline='') as f:
            json.dump(document, f, indent=self.indent, sort_keys=True, ensure_ascii=False)
            f.write('\n')
        self.logger.info(f"📁 {path}")
        return path


def complex_columns(values: List[complex]) -> Dict[str, List[float]]:
    """Columnas real/imag para valores complejos"""
    return {'real': [float(np.real(v)) for v in values], 'imag': [float(np.imag(v)) for v in values]}
