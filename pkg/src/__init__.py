"""
Weak Trace Simulator

Simulador determinista de fotones pre y post-seleccionados en interferómetros
Mach-Zehnder anidados:
- circuit: DSL de circuitos, compilación a etapas unitarias y caminos
- tsvf: estados hacia adelante/atrás, valores débiles y probabilidades ABL
- meters: marcadores ancilla, puntero de espejos vibrantes y sonda Kerr
- analysis: espectro de potencia, ajustes log-log y barrido de fuga
- cli: escenarios TOML y comandos

Los paquetes se importan como módulos de primer nivel con src/ en sys.path.
"""

__version__ = "1.0.0"

if __name__ == "__main__":
    print("=" * 60)
    print("🔬 WEAK TRACE SIMULATOR")
    print("=" * 60)
    print(f"📅 Versión: {__version__}")
    print()
    print("📋 ESTRUCTURA DEL PROYECTO:")
    print("   📁 src/circuit/   - DSL, compilador y enumeración de caminos")
    print("   📁 src/tsvf/      - Valores débiles y probabilidades ABL")
    print("   📁 src/meters/    - Marcadores, puntero y sonda Kerr")
    print("   📁 src/analysis/  - Espectro, ajustes y barrido de fuga")
    print("   📁 src/cli/       - Línea de comandos")
    print("   📁 data/          - Circuitos y escenarios")
    print()
    print("🚀 PARA EJECUTAR:")
    print("   python scripts/run_scenario.py weak-values --scenario data/scenarios/nested_mzi.toml")
    print("=" * 60)
