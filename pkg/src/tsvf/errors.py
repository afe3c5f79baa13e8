"""
Errores del motor de dos vectores de estado
"""


class UndefinedQuantityError(ArithmeticError):
    """Cantidad indefinida (división por una amplitud nula)"""


class UndefinedWeakValueError(UndefinedQuantityError):
    """Pre y post-selección ortogonales: el valor débil no está definido"""

    def __init__(self, overlap: float, boundary: int):
        self.overlap = overlap
        self.boundary = boundary
        super().__init__(
            f"valor débil indefinido: |<φ|ψ>| = {overlap:.3e} en la frontera {boundary}"
        )


class SelectionError(ValueError):
    """Estado de pre o post-selección inválido"""


class ArmSetError(ValueError):
    """Conjunto de brazos inválido para la frontera pedida"""


class PartitionError(ValueError):
    """Partición que no cubre exactamente una vez los brazos de la frontera"""
