"""
Errores de los modelos de medidor
"""

from tsvf.errors import UndefinedQuantityError


class MeterConfigError(ValueError):
    """Configuración de medidor inválida"""


class PostSelectionUnderflowError(UndefinedQuantityError):
    """La probabilidad de post-selección es numéricamente nula"""

    def __init__(self, norm: float):
        self.norm = norm
        super().__init__(f"post-selección indefinida: norma condicionada = {norm:.3e}")
