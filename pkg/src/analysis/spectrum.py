"""
Espectro de potencia
====================
Transformada discreta de Fourier (sin ventana) de series reales uniformemente
muestreadas. La potencia es unilateral y está normalizada de modo que se
cumple Parseval: Σ P_k = Σ |x_n|²·dt.

Proyecto: Weak Trace Simulator
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Optional
import logging

import numpy as np
import pandas as pd
from scipy import fft

logger = logging.getLogger(__name__)

GRID_RTOL = 1e-9


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Bins de frecuencia uniformes y potencia por bin"""

    frequencies: np.ndarray
    power: np.ndarray
    dt: float
    n_samples: int

    @property
    def resolution(self) -> float:
        return 1.0 / (self.n_samples * self.dt)

    @property
    def nyquist(self) -> float:
        return 0.5 / self.dt

    @property
    def total_power(self) -> float:
        return float(np.sum(self.power))

    def peak_power(self, frequency: float) -> float:
        """Potencia del bin más cercano a 'frequency'"""
        return peak_power(self, frequency)

    def peaks(self, frequencies: Iterable[float]) -> Dict[float, float]:
        return {float(f): peak_power(self, f) for f in frequencies}

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({'f': self.frequencies, 'power': self.power})


def check_uniform(times: np.ndarray, dt: float) -> None:
    """
    Verifica que la malla temporal sea uniforme con paso dt

    Raises:
        ValueError: Si algún paso difiere de dt
    """
    steps = np.diff(np.asarray(times, dtype=float))
    if steps.size and not np.allclose(steps, dt, rtol=GRID_RTOL, atol=0.0):
        raise ValueError(f"malla temporal no uniforme (pasos entre {steps.min():.6g} y {steps.max():.6g})")


def power_spectrum(series: Iterable[float], dt: float,
                   times: Optional[Iterable[float]] = None) -> Spectrum:
    """
    Espectro de potencia unilateral de una serie real

    Args:
        series: Muestras reales
        dt: Paso temporal
        times: Malla temporal opcional (se verifica que sea uniforme)

    Returns:
        Spectrum con f_k = k/(N·dt), k = 0..N//2
    """
    x = np.asarray(series, dtype=float)
    n = x.size
    if n < 2:
        raise ValueError("se necesitan al menos 2 muestras")
    if not dt > 0:
        raise ValueError(f"paso temporal inválido: {dt}")
    if not np.all(np.isfinite(x)):
        raise ValueError("la serie contiene muestras no finitas")
    if times is not None:
        times = np.asarray(times, dtype=float)
        if times.size != n:
            raise ValueError("la malla temporal y la serie tienen longitudes distintas")
        check_uniform(times, dt)

    coefficients = fft.rfft(x)
    power = np.abs(coefficients) ** 2 * (dt / n)
    # DC (y Nyquist si N es par) no tienen pareja negativa
    if n % 2 == 0:
        power[1:n // 2] *= 2
    else:
        power[1:n // 2 + 1] *= 2

    frequencies = np.arange(power.size) / (n * dt)
    logger.debug(f"Espectro: {n} muestras, resolución {1 / (n * dt):.6g}")
    return Spectrum(frequencies=frequencies, power=power, dt=float(dt), n_samples=n)


def peak_power(spectrum: Spectrum, frequency: float) -> float:
    """
    Potencia del bin más cercano a una frecuencia

    Raises:
        ValueError: Si la frecuencia está fuera de [0, Nyquist]
    """
    if not 0 <= frequency <= spectrum.nyquist:
        raise ValueError(f"frecuencia fuera de rango: {frequency} (Nyquist = {spectrum.nyquist})")
    index = int(np.argmin(np.abs(spectrum.frequencies - frequency)))
    return float(spectrum.power[index])
