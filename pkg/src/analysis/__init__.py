"""
Módulo de análisis
Espectro de potencia, ajuste de leyes de potencia y barrido de fuga
"""

from .fitting import PowerLawFit, fit_power_law
from .leakage import DEFAULT_ARMS, DEFAULT_EPSILONS, LeakageSweep, SweepResult, leakage_sweep
from .spectrum import Spectrum, check_uniform, peak_power, power_spectrum

__all__ = [
    'Spectrum',
    'power_spectrum',
    'peak_power',
    'check_uniform',
    'PowerLawFit',
    'fit_power_law',
    'SweepResult',
    'LeakageSweep',
    'leakage_sweep',
    'DEFAULT_EPSILONS',
    'DEFAULT_ARMS',
]
