"""
Comandos de la línea de comandos
================================
Cada comando lee su bloque del escenario, ejecuta el cálculo y escribe sus
archivos mediante un ResultWriter. Devuelven un resumen (dict) para el log.

Proyecto: Weak Trace Simulator
"""

from typing import Any, Dict, Optional
import logging

import numpy as np
import pandas as pd

from analysis import leakage_sweep, power_spectrum
from config import ANALYSIS_CONFIG, SIMULATION_CONFIG
from meters import (
    KerrProbeConfig,
    MirrorModulation,
    MirrorTilt,
    PostSelectionUnderflowError,
    kerr_probe_shift,
    linear_response_series,
    mirror_weak_values,
    quad_cell_series,
    sample_grid,
)
from tsvf import ArmSet, PropertySuite, TwoStateVector

from .scenario import Scenario, ScenarioError, arm_sets, finite, float_list
from .writers import ResultWriter, complex_columns

logger = logging.getLogger(__name__)


# ==================== VALORES DÉBILES Y ABL ====================

def cmd_weak_values(scenario: Scenario, writer: ResultWriter, **_) -> Dict[str, Any]:
    """
    Valores débiles de los conjuntos de brazos del bloque [weak_values]

    Archivos: weak_values.csv (arms, stage, real, imag) y weak_values.json
    """
    block = scenario.section('weak_values')
    model = scenario.model
    engine = TwoStateVector(model, scenario.selection())

    labels, stages, values = [], [], []
    for arms in arm_sets(block.get('sets')):
        stage = arms.resolve(model)
        labels.append(str(arms))
        stages.append(stage)
        values.append(engine.weak_value(ArmSet(arms.arms, stage)))

    frame = pd.DataFrame({'arms': labels, 'stage': stages, **complex_columns(values)})
    writer.write_csv('weak_values.csv', frame)

    overlap = engine.overlap(0)
    summary = {
        'weak_values': [
            {'arms': label, 'stage': stage, 'real': v.real, 'imag': v.imag}
            for label, stage, v in zip(labels, stages, values)
        ],
        'overlap': overlap,
        'post_selection_probability': abs(overlap) ** 2,
    }
    writer.write_json('weak_values.json', summary)
    return summary


def cmd_abl(scenario: Scenario, writer: ResultWriter, **_) -> Dict[str, Any]:
    """
    Probabilidades ABL de las particiones [[abl.partitions]]

    Archivos: abl.csv (partition, outcome, arms, stage, probability) y abl.json
    """
    partitions = scenario.section('abl').get('partitions')
    if not isinstance(partitions, list) or not partitions:
        raise ScenarioError("[abl] necesita al menos una tabla [[abl.partitions]]")

    model = scenario.model
    engine = TwoStateVector(model, scenario.selection())

    rows, summary = [], []
    for i, entry in enumerate(partitions):
        if not isinstance(entry, dict):
            raise ScenarioError(f"partición {i}: se esperaba una tabla")
        name = str(entry.get('name', f'partition_{i}'))
        sets = arm_sets(entry.get('sets'))
        probabilities = engine.abl_probabilities(sets)
        stage = engine.partition_boundary(sets)

        outcomes = []
        for outcome, (arms, p) in enumerate(zip(sets, probabilities)):
            rows.append({'partition': name, 'outcome': outcome, 'arms': str(arms),
                         'stage': stage, 'probability': p})
            outcomes.append({'arms': str(arms), 'probability': p,
                             'certain': engine.certainty_check(ArmSet(arms.arms, stage))})
        summary.append({'name': name, 'stage': stage, 'outcomes': outcomes})

    writer.write_csv('abl.csv', pd.DataFrame(rows, columns=['partition', 'outcome', 'arms', 'stage', 'probability']))
    result = {'partitions': summary}
    writer.write_json('abl.json', result)
    return result


# ==================== ESPECTRO ====================

def _modulation(block: Dict[str, Any], sigma: float) -> MirrorModulation:
    mirrors = block.get('mirrors')
    if mirrors is None:
        delta = SIMULATION_CONFIG['tilt_amplitude']
        mirrors = {tag: {'frequency': f, 'amplitude': delta}
                   for tag, f in SIMULATION_CONFIG['mirror_frequencies'].items()}
    if not isinstance(mirrors, dict):
        raise ScenarioError("[spectrum.mirrors] debe ser una tabla por espejo")

    tilts = []
    for tag, entry in mirrors.items():
        if not isinstance(entry, dict) or 'frequency' not in entry:
            raise ScenarioError(f"espejo {tag}: faltan 'frequency' y 'amplitude'")
        tilts.append(MirrorTilt(tag, finite(entry['frequency'], f'{tag}.frequency'),
                                finite(entry.get('amplitude', SIMULATION_CONFIG['tilt_amplitude']),
                                       f'{tag}.amplitude')))
    return MirrorModulation(tuple(tilts), sigma)


def cmd_spectrum(scenario: Scenario, writer: ResultWriter, **_) -> Dict[str, Any]:
    """
    Serie del detector de cuadrantes y su espectro de potencia

    Archivos: series.csv (t, x), spectrum.csv (f, power) y peaks.json
    """
    block = scenario.section('spectrum')
    samples = int(block.get('samples', ANALYSIS_CONFIG['samples']))
    duration = finite(block.get('duration', ANALYSIS_CONFIG['duration']), 'duration')
    sigma = finite(block.get('sigma', SIMULATION_CONFIG['pointer_width']), 'sigma')

    model = scenario.model
    selection = scenario.selection()
    modulation = _modulation(block, sigma)
    times = sample_grid(samples, duration)

    series = quad_cell_series(model, selection, modulation, times)
    if series.n_degenerate:
        raise PostSelectionUnderflowError(0.0)
    linear = linear_response_series(model, selection, modulation, times)
    spectrum = power_spectrum(series.x, duration / samples, times)

    writer.write_csv('series.csv', series.to_frame())
    writer.write_csv('spectrum.csv', spectrum.to_frame())

    weak_values = mirror_weak_values(model, selection)
    peaks = {
        tilt.tag: {
            'frequency': tilt.frequency,
            'amplitude': tilt.amplitude,
            'power': spectrum.peak_power(tilt.frequency),
            'weak_value': weak_values[tilt.tag],
        }
        for tilt in modulation.tilts
    }
    summary = {
        'peaks': peaks,
        'samples': samples,
        'dt': spectrum.dt,
        'total_power': spectrum.total_power,
        'signal_energy': float(np.sum(series.x ** 2) * spectrum.dt),
        'max_linear_deviation': float(np.max(np.abs(series.x - linear.x))),
    }
    writer.write_json('peaks.json', summary)
    return summary


# ==================== SONDA KERR ====================

def cmd_kerr(scenario: Scenario, writer: ResultWriter, **_) -> Dict[str, Any]:
    """
    Corrimiento de la sonda Kerr para cada [[kerr.probes]]

    Archivo: kerr.json con w_<brazo>, phi, inferred_shift y weak_value_prediction por sonda
    """
    probes = scenario.section('kerr').get('probes')
    if not isinstance(probes, list) or not probes:
        raise ScenarioError("[kerr] necesita al menos una tabla [[kerr.probes]]")

    model = scenario.model
    selection = scenario.selection()

    results = []
    for i, entry in enumerate(probes):
        if not isinstance(entry, dict):
            raise ScenarioError(f"sonda {i}: se esperaba una tabla")
        weights = entry.get('weights')
        if not isinstance(weights, dict) or not weights:
            raise ScenarioError(f"sonda {i}: 'weights' debe ser una tabla brazo = peso")
        config = KerrProbeConfig(
            weights={arm: finite(w, f'weights.{arm}') for arm, w in weights.items()},
            phi=finite(entry.get('phi'), 'phi'),
            bias=finite(entry.get('bias', SIMULATION_CONFIG['kerr_bias']), 'bias'),
        )
        readout = kerr_probe_shift(model, selection, config)
        record = {'name': str(entry.get('name', f'probe_{i}')), 'phi': config.phi, 'bias': config.bias,
                  **{f'w_{arm}': w for arm, w in config.weights.items()},
                  **readout.to_dict()}
        results.append(record)
        logger.info(f"📊 Sonda {record['name']}: corrimiento {readout.inferred_shift:.6e}")

    summary = {'probes': results}
    writer.write_json('kerr.json', summary)
    return summary


# ==================== BARRIDO DE FUGA ====================

def cmd_leakage(scenario: Scenario, writer: ResultWriter, progress: bool = False, **_) -> Dict[str, Any]:
    """
    Barrido de trazas con marcadores idénticos

    Archivos: leakage.csv (arm, epsilon, trace, trace_probability) y leakage_exponents.json
    """
    block = scenario.section('leakage')
    epsilons = float_list(block.get('epsilons', list(ANALYSIS_CONFIG['leakage_epsilons'])), 'epsilons')
    arms = block.get('arms', list(ANALYSIS_CONFIG['leakage_arms']))
    ratios = block.get('ratios', [list(pair) for pair in ANALYSIS_CONFIG['ratio_pairs']])
    if not all(isinstance(pair, list) and len(pair) == 2 for pair in ratios):
        raise ScenarioError("'ratios' debe ser una lista de pares [numerador, denominador]")

    sweep = leakage_sweep(scenario.model, scenario.selection(), epsilons, arms,
                          [tuple(pair) for pair in ratios], progress=progress)

    writer.write_csv('leakage.csv', sweep.to_frame())
    summary = {
        'epsilons': list(sweep.epsilons),
        'exponents': sweep.exponents(),
        'ratios': sweep.ratios,
        'ratios_increasing': {
            name: bool(all(b > a for a, b in zip(values, values[1:])))
            for name, values in sweep.ratios.items()
        },
    }
    writer.write_json('leakage_exponents.json', summary)
    return summary


# ==================== PROPIEDADES ====================

def cmd_verify(scenario: Optional[Scenario], writer: ResultWriter, seed: Optional[int] = None,
               **_) -> Dict[str, Any]:
    """
    Baterías aleatorizadas de aditividad y certeza con semilla fija

    Archivo: verify.json
    """
    block = scenario.data.get('verify', {}) if scenario else {}
    if not isinstance(block, dict):
        raise ScenarioError("[verify] debe ser una tabla")
    try:
        instances = int(block.get('instances', SIMULATION_CONFIG['property_instances']))
        dimensions = tuple(int(d) for d in block.get('dimensions', SIMULATION_CONFIG['property_dimensions']))
    except (TypeError, ValueError):
        raise ScenarioError("[verify] instances y dimensions deben ser enteros") from None
    if instances < 1 or any(d < 3 for d in dimensions):
        raise ScenarioError("[verify] requiere instances ≥ 1 y dimensiones ≥ 3")

    suite = PropertySuite(seed, dimensions)
    additivity = suite.additivity(instances)
    certainty_abl, certainty_weak = suite.certainty(instances)

    reports = [additivity, certainty_abl, certainty_weak]
    summary = {
        'seed': seed,
        'reports': [report.to_dict() for report in reports],
        'passed': all(report.passed for report in reports),
    }
    writer.write_json('verify.json', summary)
    return summary


COMMANDS = {
    'weak-values': cmd_weak_values,
    'abl': cmd_abl,
    'spectrum': cmd_spectrum,
    'kerr': cmd_kerr,
    'leakage': cmd_leakage,
    'verify': cmd_verify,
}
