"""
Módulo de configuración para Weak Trace Simulator
Configuraciones centralizadas del proyecto
"""

from .settings import (
    PROJECT_CONFIG,
    DATA_CONFIG,
    SIMULATION_CONFIG,
    ANALYSIS_CONFIG,
    CLI_CONFIG,
    LOGGING_CONFIG,
    get_circuit_path,
    get_scenario_path,
    get_project_info,
    setup_logging
)

__version__ = PROJECT_CONFIG['version']
__config_version__ = "1.0.0"

# Configuraciones principales exportadas
__all__ = [
    'PROJECT_CONFIG',
    'DATA_CONFIG',
    'SIMULATION_CONFIG',
    'ANALYSIS_CONFIG',
    'CLI_CONFIG',
    'LOGGING_CONFIG',
    'get_circuit_path',
    'get_scenario_path',
    'get_project_info',
    'setup_logging',
    'validate_config'
]


def validate_config():
    """
    Valida que todas las configuraciones estén correctamente definidas

    Returns:
        bool: True si todas las configuraciones son válidas
    """
    try:
        assert PROJECT_CONFIG is not None
        assert DATA_CONFIG is not None
        assert SIMULATION_CONFIG['pointer_width'] > 0

        epsilons = ANALYSIS_CONFIG['leakage_epsilons']
        assert all(b > a > 0 for a, b in zip(epsilons, epsilons[1:])), "ε no crecientes"
        frequencies = list(SIMULATION_CONFIG['mirror_frequencies'].values())
        assert len(set(frequencies)) == len(frequencies), "frecuencias repetidas"

        # Verificar rutas críticas
        circuits = DATA_CONFIG['circuits_dir']
        assert circuits.exists(), f"Directorio de circuitos no existe: {circuits}"
        assert DATA_CONFIG['default_circuit'].exists(), "Falta el circuito por defecto"

        return True

    except Exception as e:
        print(f"❌ Error en validación de configuración: {e}")
        return False


if __name__ == "__main__":
    print("⚙️ MÓDULO DE CONFIGURACIÓN")
    print("=" * 40)
    print("📋 Configuraciones disponibles:")
    print("   • PROJECT_CONFIG - Configuración general del proyecto")
    print("   • DATA_CONFIG - Rutas de circuitos y escenarios")
    print("   • SIMULATION_CONFIG - Puntero, sonda Kerr y pruebas de propiedades")
    print("   • ANALYSIS_CONFIG - Muestreo y barrido de fuga")
    print("   • CLI_CONFIG - Códigos de salida y formatos")
    print()

    if validate_config():
        print("✅ Todas las configuraciones son válidas")
    else:
        print("❌ Problemas detectados en configuración")
