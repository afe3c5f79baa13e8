"""
Tests para el módulo de circuitos
"""

import unittest
import sys
from pathlib import Path

import numpy as np

# Setup path
sys.path.insert(0, str(Path(__file__).parent.parent))
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from circuit import (  # noqa: E402
    CircuitError,
    CircuitSyntaxError,
    CycleError,
    DuplicateConsumerError,
    DuplicateProducerError,
    MissingDeclarationError,
    UnknownArmError,
    compile_circuit,
    enumerate_paths,
    format_circuit,
    load_circuit,
    parse_circuit,
    path_sum,
)

CIRCUITS = Path(__file__).parent.parent / "data" / "circuits"
ARCCOS = np.arccos(1 / np.sqrt(3))


class TestCircuitParser(unittest.TestCase):
    """Tests para el parser del DSL"""

    def setUp(self):
        """Configuración inicial"""
        self.spec = load_circuit(CIRCUITS / "nested_mzi.circ")

    def test_parse_fixture(self):
        """Test: El fixture declara 4 divisores, 5 espejos, fuente S y detector D"""
        self.assertEqual(len(self.spec.beamsplitters), 4)
        self.assertEqual([m.name for m in self.spec.mirrors], ['E', 'A', 'B', 'C', 'F'])
        self.assertEqual(self.spec.source_arm, 'S')
        self.assertEqual(self.spec.detect_arms, ('D',))
        self.assertAlmostEqual(self.spec.element('BS1').theta, ARCCOS, places=15)

    def test_comments_and_key_order(self):
        """Test: Comentarios, líneas vacías y claves en cualquier orden"""
        text = """
        # comentario
        source arm=s   # fuente

        beamsplitter BS phi=0.0 theta=0.5 out=x,y in=s,_
        detect arm=x
        """
        spec = parse_circuit(text)
        element = spec.element('BS')
        self.assertEqual(element.inputs, ('s', '_'))
        self.assertEqual(element.outputs, ('x', 'y'))
        self.assertEqual(element.theta, 0.5)

    def test_syntax_error_position(self):
        """Test: Los errores de sintaxis informan línea y columna"""
        text = "source arm=S\nbeamsplitter BS1 in=S,_ out=A,E theta=abc phi=0\ndetect arm=A"
        with self.assertRaises(CircuitSyntaxError) as ctx:
            parse_circuit(text)
        self.assertEqual(ctx.exception.line, 2)
        self.assertEqual(ctx.exception.column, 39)

    def test_unknown_statement(self):
        """Test: Sentencia desconocida"""
        with self.assertRaises(CircuitSyntaxError):
            parse_circuit("source arm=s\nlens L arm_in=s arm_out=t\ndetect arm=s")

    def test_unknown_arm(self):
        """Test: Un brazo que nadie produce"""
        with self.assertRaises(UnknownArmError) as ctx:
            parse_circuit("source arm=s\nmirror M arm_in=q arm_out=t\ndetect arm=t")
        self.assertEqual(ctx.exception.arm, 'q')

    def test_cycle(self):
        """Test: Ciclo entre elementos"""
        text = (
            "source arm=s\n"
            "beamsplitter BS in=s,y out=a,b theta=0.5 phi=0\n"
            "mirror M arm_in=b arm_out=x\n"
            "mirror N arm_in=x arm_out=y\n"
            "detect arm=a"
        )
        with self.assertRaises(CycleError):
            parse_circuit(text)

    def test_duplicate_producer(self):
        """Test: Dos elementos producen el mismo brazo"""
        text = (
            "source arm=s\n"
            "beamsplitter BS in=s,_ out=a,b theta=0.5 phi=0\n"
            "mirror M arm_in=b arm_out=a\n"
            "detect arm=a"
        )
        with self.assertRaises(DuplicateProducerError):
            parse_circuit(text)

    def test_duplicate_consumer(self):
        """Test: Un brazo alimenta dos elementos"""
        text = (
            "source arm=s\n"
            "mirror M arm_in=s arm_out=a\n"
            "mirror N arm_in=s arm_out=b\n"
            "detect arm=a"
        )
        with self.assertRaises(DuplicateConsumerError):
            parse_circuit(text)

    def test_missing_declarations(self):
        """Test: Falta source o detect"""
        with self.assertRaises(MissingDeclarationError):
            parse_circuit("mirror M arm_in=s arm_out=a\ndetect arm=a")
        with self.assertRaises(MissingDeclarationError):
            parse_circuit("source arm=s\nmirror M arm_in=s arm_out=a")

    def test_detector_must_be_terminal(self):
        """Test: El detector no puede alimentar otro elemento"""
        with self.assertRaises(CircuitError):
            parse_circuit("source arm=s\nmirror M arm_in=s arm_out=a\nmirror N arm_in=a arm_out=b\ndetect arm=a")

    def test_out_of_order_declaration(self):
        """Test: Los elementos se ordenan topológicamente"""
        text = (
            "source arm=s\n"
            "mirror M arm_in=x arm_out=x2\n"
            "beamsplitter BS in=s,_ out=x,y theta=0.5 phi=0\n"
            "detect arm=x2"
        )
        spec = parse_circuit(text)
        self.assertEqual([e.name for e in spec.elements], ['BS', 'M'])

    def test_round_trip(self):
        """Test: parse(format(spec)) reproduce el circuito"""
        for name in ('nested_mzi', 'single_bs', 'empty', 'blocked'):
            spec = load_circuit(CIRCUITS / f"{name}.circ")
            self.assertEqual(parse_circuit(format_circuit(spec)), spec, name)


class TestCircuitCompiler(unittest.TestCase):
    """Tests para el compilador y la tabla de caminos"""

    def setUp(self):
        """Configuración inicial"""
        self.model = compile_circuit(load_circuit(CIRCUITS / "nested_mzi.circ"))

    def test_boundaries(self):
        """Test: Etiquetas vivas con dimensión constante"""
        self.assertEqual(self.model.dimension, 3)
        self.assertEqual(self.model.n_stages, 9)
        self.assertEqual(self.model.arms_at(0), ('S', 'BS1.vac2', 'BS2.vac2'))
        self.assertEqual(self.model.arms_at(3), ('A', 'B', 'C'))
        self.assertEqual(self.model.arms_at(9), ('D', "D'", 'Lk'))
        self.assertEqual(self.model.boundary_of(['A', 'B', 'C']), 3)
        self.assertEqual(self.model.boundary_of(['F']), 7)

    def test_boundary_out_of_range(self):
        """Test: Fronteras fuera de 0..N son un error de validación"""
        for boundary in (-1, 10, 42):
            with self.assertRaises(CircuitError):
                self.model.arms_at(boundary)
            with self.assertRaises(CircuitError):
                self.model.index_of('A', boundary)
        with self.assertRaises(UnknownArmError):
            self.model.index_of('A', 0)

    def test_stage_embeds_local_matrix(self):
        """Test: Cada etapa contiene la matriz local en sus posiciones y la identidad fuera"""
        for k, stage in enumerate(self.model.stages, start=1):
            block = stage.matrix[np.ix_(stage.positions, stage.positions)]
            self.assertTrue(np.allclose(block, stage.element.local_matrix(), atol=0), stage.element.name)
            others = [i for i in range(self.model.dimension) if i not in stage.positions]
            self.assertTrue(np.array_equal(stage.matrix[np.ix_(others, others)], np.eye(len(others))))
            self.assertEqual(stage.arms_out, self.model.arms_at(k))

    def test_unitarity(self):
        """Test: Todas las etapas son unitarias a 1e-12"""
        self.assertLessEqual(self.model.max_unitarity_defect(), 1e-12)
        total = self.model.transfer_matrix()
        self.assertTrue(np.allclose(total.conj().T @ total, np.eye(3), atol=1e-12))

    def test_transfer_amplitude(self):
        """Test: Amplitud fuente -> D igual a 1/3"""
        amplitude = self.model.transfer_amplitude('D')
        self.assertAlmostEqual(amplitude.real, 1 / 3, places=14)
        self.assertAlmostEqual(amplitude.imag, 0.0, places=14)

    def test_path_table(self):
        """Test: Tres caminos A, E-B-F y E-C-F con amplitudes 1/3, -1/3, 1/3"""
        paths = {path.label: path.amplitude for path in self.model.path_table}
        self.assertEqual(set(paths), {'A', 'E-B-F', 'E-C-F'})
        self.assertAlmostEqual(paths['A'].real, 1 / 3, places=14)
        self.assertAlmostEqual(paths['E-B-F'].real, -1 / 3, places=14)
        self.assertAlmostEqual(paths['E-C-F'].real, 1 / 3, places=14)
        self.assertAlmostEqual(abs(path_sum(self.model.path_table) - self.model.transfer_amplitude()), 0.0, places=14)

    def test_paths_skip_vacuum(self):
        """Test: Los puertos de vacío nunca aparecen en la tabla"""
        for path in self.model.path_table:
            self.assertFalse(any('.vac' in arm for arm in path.arms))
            self.assertEqual(path.arms[0], 'S')
            self.assertEqual(path.arms[-1], 'D')

    def test_mirror_boundary(self):
        """Test: Frontera y brazo de entrada de cada espejo"""
        self.assertEqual(self.model.mirror_tags, ('E', 'A', 'B', 'C', 'F'))
        self.assertEqual(self.model.mirror_boundary('B'), (4, 'B'))
        self.assertEqual(self.model.mirror_boundary('F'), (7, 'F'))
        with self.assertRaises(KeyError):
            self.model.mirror_boundary('Z')

    def test_single_beamsplitter_convention(self):
        """Test: Un divisor reproduce la matriz de la convención"""
        model = compile_circuit(load_circuit(CIRCUITS / "single_bs.circ"))
        c = s = 1 / np.sqrt(2)
        expected = np.array([[c, s], [-s, c]])
        self.assertTrue(np.allclose(model.transfer_matrix(), expected, atol=1e-15))
        self.assertEqual(model.arms_at(1), ('x', 'y'))

    def test_empty_circuit(self):
        """Test: Circuito vacío con transferencia identidad"""
        model = compile_circuit(load_circuit(CIRCUITS / "empty.circ"))
        self.assertEqual(model.dimension, 1)
        self.assertEqual(model.n_stages, 0)
        self.assertEqual(model.transfer_amplitude(), 1.0)
        self.assertEqual(len(model.path_table), 1)

    def test_phaseshift(self):
        """Test: El desfasador aplica e^{i·value}"""
        model = compile_circuit(parse_circuit("source arm=a\nphaseshift P arm_in=a arm_out=b value=0.5\ndetect arm=b"))
        self.assertAlmostEqual(abs(model.transfer_amplitude() - np.exp(0.5j)), 0.0, places=15)

    def test_enumerate_other_detector(self):
        """Test: Caminos hacia un detector secundario"""
        model = compile_circuit(load_circuit(CIRCUITS / "single_bs.circ"))
        paths = enumerate_paths(model, 'y')
        self.assertEqual(len(paths), 1)
        self.assertAlmostEqual(paths[0].amplitude.real, -1 / np.sqrt(2), places=15)


def run_circuit_tests():
    """Ejecuta todos los tests del módulo de circuitos"""
    unittest.main(argv=[''], exit=False, verbosity=2)


if __name__ == "__main__":
    run_circuit_tests()
