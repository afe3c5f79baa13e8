"""
Ajuste de leyes de potencia
Regresión por mínimos cuadrados sobre (ln ε, ln y)
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np
from scipy import stats


@dataclass(frozen=True)
class PowerLawFit:
    """y ≈ prefactor · ε^exponent"""

    exponent: float
    prefactor: float
    r_squared: float
    n_points: int

    def predict(self, epsilon: float) -> float:
        return self.prefactor * epsilon ** self.exponent

    def to_dict(self) -> dict:
        return {
            'exponent': self.exponent,
            'prefactor': self.prefactor,
            'r_squared': self.r_squared,
            'n_points': self.n_points,
        }


def fit_power_law(points: Iterable[Tuple[float, float]]) -> PowerLawFit:
    """
    Ajusta y = a·ε^p en escala log-log

    Args:
        points: Pares (ε, y) con ε > 0 e y > 0

    Returns:
        PowerLawFit con exponente (pendiente), prefactor y r²

    Raises:
        ValueError: Con menos de 3 puntos o valores no positivos
    """
    data = np.asarray(list(points), dtype=float)
    if data.ndim != 2 or data.shape[0] < 3 or data.shape[1] != 2:
        raise ValueError("se necesitan al menos 3 puntos (ε, y)")
    if not np.all(np.isfinite(data)) or np.any(data <= 0):
        raise ValueError("el ajuste log-log requiere ε > 0 e y > 0")

    result = stats.linregress(np.log(data[:, 0]), np.log(data[:, 1]))
    return PowerLawFit(
        exponent=float(result.slope),
        prefactor=float(np.exp(result.intercept)),
        r_squared=float(result.rvalue ** 2),
        n_points=int(data.shape[0]),
    )
