"""
Módulo de línea de comandos
Escenarios TOML, comandos y escritura determinista de resultados
"""

from pathlib import Path
import sys

# La configuración vive en la raíz del proyecto, fuera de src/
_PROJECT_ROOT = Path(__file__).resolve().parents[2]
if str(_PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(_PROJECT_ROOT))

from .commands import (  # noqa: E402
    COMMANDS,
    cmd_abl,
    cmd_kerr,
    cmd_leakage,
    cmd_spectrum,
    cmd_verify,
    cmd_weak_values,
)
from .main import build_parser, main, run  # noqa: E402
from .scenario import Scenario, ScenarioError, load_scenario  # noqa: E402
from .writers import ResultWriter  # noqa: E402

__all__ = [
    'Scenario',
    'ScenarioError',
    'load_scenario',
    'ResultWriter',
    'COMMANDS',
    'cmd_weak_values',
    'cmd_abl',
    'cmd_spectrum',
    'cmd_kerr',
    'cmd_leakage',
    'cmd_verify',
    'build_parser',
    'run',
    'main',
]
