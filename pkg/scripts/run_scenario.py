#!/usr/bin/env python3
"""
Lanzador de la línea de comandos desde una copia del repositorio

Uso:
    python scripts/run_scenario.py <comando> --scenario data/scenarios/nested_mzi.toml --out output/
    python scripts/run_scenario.py all --scenario data/scenarios/nested_mzi.toml
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

import scripts  # noqa: E402,F401  (configura sys.path)
from cli import COMMANDS, run  # noqa: E402

# Comandos que acepta el escenario del fixture completo
FIXTURE_COMMANDS = ['weak-values', 'abl', 'spectrum', 'kerr', 'leakage']


def run_all(argv):
    """Ejecuta todos los comandos del fixture con los mismos argumentos"""
    worst = 0
    for command in FIXTURE_COMMANDS:
        print(f"🏃 {command}...")
        code = run([command] + argv)
        print(f"   {'✅' if code == 0 else '❌'} código de salida {code}")
        worst = max(worst, code)
    return worst


def main():
    argv = sys.argv[1:]
    if argv and argv[0] == 'all':
        return run_all(argv[1:])
    if not argv or argv[0] not in COMMANDS:
        print(f"💡 Comandos: {', '.join(list(COMMANDS) + ['all'])}")
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
