"""
Errores del módulo de circuitos
Jerarquía de excepciones para el parser y el compilador del DSL
"""

from typing import Optional, Sequence


class CircuitError(ValueError):
    """Error base de validación de un circuito"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"línea {line}: {message}"
        super().__init__(message)


class CircuitSyntaxError(CircuitError):
    """Error de sintaxis con línea y columna"""

    def __init__(self, message: str, line: int, column: int):
        self.column = column
        super().__init__(f"columna {column}: {message}", line=line)


class UnknownArmError(CircuitError):
    """Un elemento referencia un brazo que nadie produce"""

    def __init__(self, arm: str, line: Optional[int] = None):
        self.arm = arm
        super().__init__(f"brazo desconocido '{arm}'", line=line)


class DuplicateProducerError(CircuitError):
    """Dos elementos producen el mismo brazo"""

    def __init__(self, arm: str, line: Optional[int] = None):
        self.arm = arm
        super().__init__(f"el brazo '{arm}' ya es salida de otro elemento", line=line)


class DuplicateConsumerError(CircuitError):
    """Dos elementos consumen el mismo brazo"""

    def __init__(self, arm: str, line: Optional[int] = None):
        self.arm = arm
        super().__init__(f"el brazo '{arm}' ya es entrada de otro elemento", line=line)


class CycleError(CircuitError):
    """No existe orden topológico de los elementos"""

    def __init__(self, elements: Sequence[str]):
        self.elements = tuple(elements)
        super().__init__(f"ciclo detectado entre elementos: {', '.join(self.elements)}")


class MissingDeclarationError(CircuitError):
    """Falta la declaración source o detect"""


class UnitarityError(CircuitError):
    """Una etapa compilada no es unitaria"""
