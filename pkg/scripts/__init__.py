#!/usr/bin/env python3
"""
Scripts de utilidad para el proyecto Weak Trace Simulator

Este módulo prepara el PYTHONPATH para ejecutar la línea de comandos y los
escenarios desde una copia del repositorio.
"""

import sys
from pathlib import Path

# Configuración del proyecto
PROJECT_NAME = "Weak Trace Simulator"
PROJECT_VERSION = "1.0.0"


def get_project_root():
    """
    Obtiene la ruta raíz del proyecto automáticamente

    Returns:
        Path: Ruta absoluta al directorio raíz del proyecto
    """
    current_file = Path(__file__).resolve()
    # Subir desde scripts/ hasta la raíz del proyecto
    return current_file.parent.parent


def setup_project_path():
    """
    Configura el PYTHONPATH para importar módulos del proyecto

    Permite importar config y los paquetes de src/ como módulos de primer nivel
    """
    project_root = get_project_root()

    paths_to_add = [
        str(project_root),  # Raíz del proyecto (config)
        str(project_root / "src"),  # Código fuente
    ]

    for path in paths_to_add:
        if path not in sys.path:
            sys.path.insert(0, path)


def validate_project_structure():
    """
    Valida que la estructura del proyecto sea correcta

    Returns:
        bool: True si la estructura es válida, False en caso contrario
    """
    project_root = get_project_root()

    required_dirs = ['src', 'data/circuits', 'data/scenarios', 'config', 'tests']
    required_files = ['requirements.txt', 'data/circuits/nested_mzi.circ']

    missing_items = []

    for directory in required_dirs:
        if not (project_root / directory).exists():
            missing_items.append(f"📁 {directory}/")

    for file in required_files:
        if not (project_root / file).exists():
            missing_items.append(f"📄 {file}")

    if missing_items:
        print("⚠️ Estructura del proyecto incompleta:")
        for item in missing_items:
            print(f"   ❌ Falta: {item}")
        return False

    print("✅ Estructura del proyecto válida")
    return True


def list_available_scenarios():
    """
    Lista los escenarios TOML disponibles

    Returns:
        list: Nombres de archivo de escenario
    """
    scenarios_dir = get_project_root() / "data" / "scenarios"
    return sorted(file.name for file in scenarios_dir.glob("*.toml"))


# Configurar automáticamente cuando se importa el módulo
setup_project_path()

if __name__ == "__main__":
    print("=" * 60)
    print(f"🎯 {PROJECT_NAME}")
    print(f"📋 Versión: {PROJECT_VERSION}")
    print("=" * 60)
    print(f"📍 Proyecto ubicado en: {get_project_root()}")

    print("\n🔍 Validando estructura del proyecto...")
    validate_project_structure()

    scenarios = list_available_scenarios()
    print(f"\n🛠️ Escenarios disponibles ({len(scenarios)}):")
    for i, scenario in enumerate(scenarios, 1):
        print(f"   {i}. {scenario}")
    print("\n💡 Para ejecutar un escenario:")
    print("   python scripts/run_scenario.py weak-values --scenario data/scenarios/nested_mzi.toml")
