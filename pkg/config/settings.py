"""
Configuraciones generales del proyecto Weak Trace Simulator
Parámetros, rutas y constantes del sistema
"""

import logging.config
import os
from pathlib import Path

import numpy as np
from dotenv import load_dotenv

# ==================== CONFIGURACIÓN DEL PROYECTO ====================

PROJECT_CONFIG = {
    'name': 'Weak Trace Simulator',
    'tool': 'weaktrace',
    'version': '1.0.0',
    'description': 'Simulador de fotones pre y post-seleccionados en interferómetros Mach-Zehnder anidados',
    'encoding': 'utf-8',
    'python_requires': (3, 11),  # tomllib
}

# Rutas del proyecto
BASE_DIR = Path(__file__).parent.parent.absolute()
DATA_DIR = BASE_DIR / "data"
SRC_DIR = BASE_DIR / "src"
TESTS_DIR = BASE_DIR / "tests"

load_dotenv(BASE_DIR / ".env")

OUTPUT_DIR = Path(os.getenv('WEAKTRACE_OUTPUT_DIR', BASE_DIR / "output"))

# ==================== CONFIGURACIÓN DE DATOS ====================

CIRCUITS_DIR = DATA_DIR / "circuits"
SCENARIOS_DIR = DATA_DIR / "scenarios"

DATA_CONFIG = {
    'base_dir': BASE_DIR,
    'data_dir': DATA_DIR,
    'circuits_dir': CIRCUITS_DIR,
    'scenarios_dir': SCENARIOS_DIR,
    'output_dir': OUTPUT_DIR,

    # Fixtures principales
    'default_circuit': CIRCUITS_DIR / "nested_mzi.circ",
    'default_scenario': SCENARIOS_DIR / "nested_mzi.toml",
    'circuit_suffix': '.circ',
    'scenario_suffix': '.toml',
}

# ==================== CONFIGURACIÓN DE SIMULACIÓN ====================

SIMULATION_CONFIG = {
    # Puntero gaussiano de ancho fijo
    'pointer_width': 1.0,

    # Sesgo del interferómetro sonda (cuadratura)
    'kerr_bias': np.pi / 2,

    # Modulación de espejos del fixture: espejo -> (frecuencia, δ)
    'mirror_frequencies': {'A': 10.0, 'B': 20.0, 'C': 30.0, 'E': 40.0, 'F': 50.0},
    'tilt_amplitude': 1e-3,

    # Pruebas de propiedades
    'property_instances': 1000,
    'property_dimensions': (3, 4, 5, 6, 7, 8),
    'random_seed': 42,
}

# ==================== CONFIGURACIÓN DE ANÁLISIS ====================

ANALYSIS_CONFIG = {
    # Muestreo: N muestras en duración unitaria (dt = 1/N)
    'samples': 4096,
    'duration': 1.0,

    # Barrido de fuga
    'leakage_epsilons': (1e-4, 2e-4, 5e-4, 1e-3, 2e-3, 5e-3, 1e-2),
    'leakage_arms': ('A', 'B', 'C', 'E', 'F'),
    'ratio_pairs': (('F', 'B'),),
}

# ==================== CONFIGURACIÓN DE CLI ====================

CLI_CONFIG = {
    'exit_codes': {
        'ok': 0,
        'validation': 2,
        'undefined': 3,
        'io': 4,
        'property_failure': 1,
    },
    'csv_float_format': '%.17g',
    'json_indent': 2,
    'show_progress': False,
}

# ==================== CONFIGURACIÓN DE LOGGING ====================

LOG_LEVEL = os.getenv('WEAKTRACE_LOG_LEVEL', 'WARNING').upper()
LOG_FILE = os.getenv('WEAKTRACE_LOG_FILE')

LOGGING_CONFIG = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'standard': {
            'format': '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
        },
        'detailed': {
            'format': '%(asctime)s [%(levelname)s] %(name)s:%(lineno)d: %(message)s'
        }
    },
    'handlers': {
        'default': {
            'level': 'DEBUG',
            'formatter': 'standard',
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
        }
    },
    'loggers': {
        '': {
            'handlers': ['default'],
            'level': LOG_LEVEL,
            'propagate': False
        }
    }
}

if LOG_FILE:
    LOGGING_CONFIG['handlers']['file'] = {
        'level': 'DEBUG',
        'formatter': 'detailed',
        'class': 'logging.FileHandler',
        'filename': LOG_FILE,
        'mode': 'a',
    }
    LOGGING_CONFIG['loggers']['']['handlers'].append('file')

# ==================== FUNCIONES DE UTILIDAD ====================

def get_circuit_path(name: str) -> Path:
    """Ruta de un circuito del directorio de fixtures (con o sin sufijo)"""
    path = CIRCUITS_DIR / name
    return path if path.suffix else path.with_suffix(DATA_CONFIG['circuit_suffix'])

def get_scenario_path(name: str) -> Path:
    """Ruta de un escenario del directorio de fixtures (con o sin sufijo)"""
    path = SCENARIOS_DIR / name
    return path if path.suffix else path.with_suffix(DATA_CONFIG['scenario_suffix'])

def setup_logging(level: str = None) -> None:
    """
    Configura el logging del proyecto (sólo desde los puntos de entrada)

    Args:
        level: Nivel del logger raíz; por defecto WEAKTRACE_LOG_LEVEL
    """
    config = {**LOGGING_CONFIG, 'loggers': {'': {**LOGGING_CONFIG['loggers']['']}}}
    if level:
        config['loggers']['']['level'] = level.upper()
    logging.config.dictConfig(config)

def get_project_info() -> dict:
    """
    Obtiene información completa del proyecto

    Returns:
        dict: Información del proyecto
    """
    return {
        **PROJECT_CONFIG,
        'base_directory': str(BASE_DIR),
        'data_directory': str(DATA_DIR),
        'output_directory': str(OUTPUT_DIR),
        'circuits': sorted(p.name for p in CIRCUITS_DIR.glob('*.circ')),
        'scenarios': sorted(p.name for p in SCENARIOS_DIR.glob('*.toml')),
    }

if __name__ == "__main__":
    print("⚙️ CONFIGURACIÓN DEL PROYECTO")
    print("=" * 50)

    info = get_project_info()
    print(f"📚 Proyecto: {info['name']} v{info['version']}")
    print(f"📁 Directorio base: {info['base_directory']}")
    print(f"📁 Salida: {info['output_directory']}")
    print(f"🔬 Circuitos: {', '.join(info['circuits'])}")
    print(f"🎯 Escenarios: {', '.join(info['scenarios'])}")
