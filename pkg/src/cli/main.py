"""
Punto de entrada de la línea de comandos
========================================
weaktrace <comando> [--scenario S] [--circuit C] [--out DIR] [--seed N]

Códigos de salida: 0 éxito, 2 validación, 3 cantidad indefinida, 4 E/S.

Proyecto: Weak Trace Simulator
"""

from pathlib import Path
from typing import List, Optional
import argparse
import logging
import sys

from config import CLI_CONFIG, DATA_CONFIG, PROJECT_CONFIG, SIMULATION_CONFIG, setup_logging
from tsvf import UndefinedQuantityError

from .commands import COMMANDS
from .scenario import ScenarioError, load_scenario, parse_seed
from .writers import ResultWriter

logger = logging.getLogger(__name__)

EXIT = CLI_CONFIG['exit_codes']


def _seed(value: str) -> int:
    try:
        return parse_seed(value)
    except ScenarioError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    """Parser de argumentos con un subcomando por operación"""
    parser = argparse.ArgumentParser(
        prog=PROJECT_CONFIG['tool'],
        description=PROJECT_CONFIG['description'],
    )
    parser.add_argument('--version', action='version',
                        version=f"{PROJECT_CONFIG['tool']} {PROJECT_CONFIG['version']}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--scenario', type=Path, help='archivo de escenario TOML')
    common.add_argument('--circuit', type=Path, help='circuito DSL (reemplaza al del escenario)')
    common.add_argument('--out', type=Path, help='directorio de salida')
    common.add_argument('--seed', type=_seed, help='semilla de 64 bits sin signo')
    common.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='nivel de logging')
    common.add_argument('--progress', action='store_true', default=CLI_CONFIG['show_progress'],
                        help='mostrar barras de progreso')

    subparsers = parser.add_subparsers(dest='command', required=True, metavar='COMANDO')
    helps = {
        'weak-values': 'valores débiles de conjuntos de brazos',
        'abl': 'probabilidades ABL de particiones',
        'spectrum': 'serie del detector de cuadrantes y espectro',
        'kerr': 'corrimiento de fase de la sonda Kerr',
        'leakage': 'barrido de trazas y exponentes de escala',
        'verify': 'baterías aleatorizadas de propiedades',
    }
    for name in COMMANDS:
        subparsers.add_parser(name, parents=[common], help=helps[name])
    return parser


def execute(args: argparse.Namespace) -> int:
    """Ejecuta el comando ya parseado y devuelve el código de salida"""
    if args.scenario is None and args.circuit is None and args.command != 'verify':
        raise ScenarioError("se requiere --scenario o --circuit")

    scenario = None
    if args.scenario is not None or args.circuit is not None:
        scenario = load_scenario(args.scenario, args.circuit)

    seed = args.seed
    if seed is None and scenario is not None:
        seed = scenario.seed
    if seed is None and args.command == 'verify':
        seed = SIMULATION_CONFIG['random_seed']

    out_dir = args.out or (scenario.output_dir if scenario else None) or DATA_CONFIG['output_dir']
    header = {
        'tool': PROJECT_CONFIG['tool'],
        'version': PROJECT_CONFIG['version'],
        'scenario': scenario.digest(args.command, seed) if scenario else 'none',
        'command': args.command,
        'seed': seed,
    }
    writer = ResultWriter(out_dir, header, CLI_CONFIG['csv_float_format'], CLI_CONFIG['json_indent'])

    summary = COMMANDS[args.command](scenario, writer, seed=seed, progress=args.progress)
    if args.command == 'verify' and not summary['passed']:
        logger.error("❌ Hay instancias que no cumplen las propiedades")
        return EXIT['property_failure']

    logger.info(f"✅ {args.command}: {len(writer.written)} archivos en {out_dir}")
    return EXIT['ok']


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parsea argumentos, ejecuta y traduce excepciones a códigos de salida

    Args:
        argv: Argumentos (por defecto sys.argv[1:])

    Returns:
        Código de salida
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT['ok'] if e.code in (0, None) else EXIT['validation']

    setup_logging(args.log_level)
    try:
        return execute(args)
    except UndefinedQuantityError as e:
        logger.error(f"❌ Cantidad indefinida: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT['undefined']
    except ValueError as e:
        logger.error(f"❌ Validación: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT['validation']
    except OSError as e:
        logger.error(f"❌ E/S: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT['io']


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
