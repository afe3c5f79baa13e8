"""
Módulo de tests para Weak Trace Simulator
Suite de pruebas unitarias para validar funcionalidad de módulos
"""

import sys
from pathlib import Path

# Agregar raíz (config) y src al path para importaciones
project_root = Path(__file__).parent.parent
src_path = project_root / "src"
sys.path.insert(0, str(project_root))
sys.path.insert(0, str(src_path))

__version__ = "1.0.0"
__test_suite__ = "Weak Trace Tests"

# Fixtures comunes
CIRCUITS_DIR = project_root / "data" / "circuits"
SCENARIOS_DIR = project_root / "data" / "scenarios"
NESTED_MZI = CIRCUITS_DIR / "nested_mzi.circ"


def setup_test_environment():
    """
    Configura el entorno de pruebas
    """
    import logging
    logging.basicConfig(level=logging.WARNING)  # Silenciar logs durante tests

    print("🧪 Configurando entorno de tests...")
    print(f"📁 Proyecto: {project_root}")
    print(f"📦 Módulos src: {src_path}")
    return True


if __name__ == "__main__":
    print("🧪 SUITE DE TESTS - WEAK TRACE SIMULATOR")
    print("=" * 50)
    print("📋 Tests disponibles:")
    print("   • test_circuit.py       - Parser, compilador y caminos")
    print("   • test_tsvf.py          - Valores débiles y ABL")
    print("   • test_properties.py    - Baterías aleatorizadas")
    print("   • test_meters.py        - Marcadores, puntero y sonda Kerr")
    print("   • test_analysis.py      - Espectro, ajustes y barrido de fuga")
    print("   • test_cli.py           - Línea de comandos y archivos de salida")
    print("   • test_config.py        - Configuración")
    print("   • integration_test.py   - Flujo completo")
    print()
    print("🚀 Para ejecutar todos los tests:")
    print("   python -m pytest tests/")
    print()
    print("🎯 Para ejecutar un test específico:")
    print("   python tests/test_tsvf.py")
