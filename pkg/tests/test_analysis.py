"""
Tests para el módulo de análisis: espectro, ajustes y barrido de fuga
"""

import unittest
import sys
from pathlib import Path

import numpy as np

# Setup path
sys.path.insert(0, str(Path(__file__).parent.parent))
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from analysis import fit_power_law, leakage_sweep, peak_power, power_spectrum  # noqa: E402
from circuit import compile_circuit, load_circuit  # noqa: E402
from meters import MirrorModulation, quad_cell_series, sample_grid  # noqa: E402
from tsvf import SelectionPair  # noqa: E402

CIRCUITS = Path(__file__).parent.parent / "data" / "circuits"


class TestPowerSpectrum(unittest.TestCase):
    """Tests del espectro de potencia unilateral"""

    def test_bin_aligned_sine(self):
        """Test: Un seno de 10 Hz con N = 1024 concentra 0.5 en el bin 10"""
        n = 1024
        times = np.arange(n) / n
        spectrum = power_spectrum(np.sin(2 * np.pi * 10 * times), 1 / n, times)
        self.assertEqual(spectrum.frequencies[10], 10.0)
        self.assertAlmostEqual(spectrum.power[10], 0.5, places=12)
        others = np.delete(spectrum.power, 10)
        self.assertLess(np.max(others), 1e-20)
        self.assertEqual(spectrum.nyquist, 512.0)
        self.assertEqual(spectrum.resolution, 1.0)

    def test_zero_series(self):
        """Test: Serie nula, espectro nulo"""
        spectrum = power_spectrum(np.zeros(64), 1 / 64)
        self.assertEqual(spectrum.total_power, 0.0)

    def test_parseval(self):
        """Test: Σ potencia = Σ x² dt para N par e impar"""
        rng = np.random.default_rng(11)
        for n in (256, 255):
            x = rng.normal(size=n)
            dt = 1 / n
            spectrum = power_spectrum(x, dt)
            self.assertEqual(len(spectrum.power), n // 2 + 1)
            self.assertAlmostEqual(spectrum.total_power, float(np.sum(x ** 2) * dt), places=10)

    def test_scaling(self):
        """Test: Duplicar la serie cuadruplica la potencia"""
        rng = np.random.default_rng(5)
        x = rng.normal(size=128)
        base = power_spectrum(x, 1 / 128).power
        doubled = power_spectrum(2 * x, 1 / 128).power
        self.assertTrue(np.allclose(doubled, 4 * base, rtol=1e-12, atol=0))

    def test_invalid_input(self):
        """Test: Malla no uniforme, muestras no finitas o insuficientes"""
        times = np.array([0.0, 0.1, 0.25, 0.3])
        with self.assertRaises(ValueError):
            power_spectrum(np.ones(4), 0.1, times)
        with self.assertRaises(ValueError):
            power_spectrum(np.array([0.0, np.nan, 1.0]), 0.1)
        with self.assertRaises(ValueError):
            power_spectrum(np.ones(1), 0.1)
        with self.assertRaises(ValueError):
            power_spectrum(np.ones(8), 0.0)

    def test_peak_power(self):
        """Test: Bin más cercano y frecuencias fuera de rango"""
        n = 1024
        times = np.arange(n) / n
        spectrum = power_spectrum(np.sin(2 * np.pi * 10 * times), 1 / n)
        self.assertAlmostEqual(peak_power(spectrum, 10.3), 0.5, places=12)
        self.assertEqual(spectrum.peaks([10.0])[10.0], spectrum.peak_power(10.0))
        with self.assertRaises(ValueError):
            peak_power(spectrum, 600.0)
        with self.assertRaises(ValueError):
            peak_power(spectrum, -1.0)

    def test_fixture_pointer_spectrum(self):
        """Test: Picos en 10, 20 y 30 de potencia δ²/2 y nada en 40 ni 50"""
        model = compile_circuit(load_circuit(CIRCUITS / "nested_mzi.circ"))
        selection = SelectionPair.for_model(model, 'D')
        delta = 1e-3
        modulation = MirrorModulation.from_mapping(
            {'A': (10.0, delta), 'B': (20.0, delta), 'C': (30.0, delta), 'E': (40.0, delta), 'F': (50.0, delta)}
        )
        times = sample_grid(4096)
        series = quad_cell_series(model, selection, modulation, times)
        spectrum = power_spectrum(series.x, series.dt, times)

        expected = delta ** 2 / 2
        reference = spectrum.peak_power(10.0)
        for f in (10.0, 20.0, 30.0):
            self.assertLess(abs(spectrum.peak_power(f) / expected - 1), 1e-2, f)
        for f in (40.0, 50.0):
            self.assertLessEqual(spectrum.peak_power(f), 1e-4 * reference, f)


class TestPowerLawFit(unittest.TestCase):
    """Tests del ajuste log-log"""

    def setUp(self):
        """Configuración inicial"""
        self.epsilons = np.array([1e-4, 2e-4, 5e-4, 1e-3, 2e-3, 5e-3, 1e-2])

    def test_linear(self):
        """Test: y = ε da exponente 1 y prefactor 1"""
        fit = fit_power_law(zip(self.epsilons, self.epsilons))
        self.assertAlmostEqual(fit.exponent, 1.0, places=10)
        self.assertAlmostEqual(fit.prefactor, 1.0, places=8)
        self.assertAlmostEqual(fit.r_squared, 1.0, places=10)
        self.assertEqual(fit.n_points, 7)

    def test_quadratic(self):
        """Test: y = 3ε² da exponente 2 y prefactor 3"""
        fit = fit_power_law(zip(self.epsilons, 3 * self.epsilons ** 2))
        self.assertAlmostEqual(fit.exponent, 2.0, places=10)
        self.assertAlmostEqual(fit.prefactor, 3.0, places=8)
        self.assertAlmostEqual(fit.predict(0.1), 0.03, places=10)

    def test_planted_exponents(self):
        """Test: Se recuperan exponentes 0.5, 1, 2 y 3"""
        for exponent in (0.5, 1.0, 2.0, 3.0):
            fit = fit_power_law(zip(self.epsilons, 0.7 * self.epsilons ** exponent))
            self.assertLess(abs(fit.exponent - exponent), 1e-10)

    def test_invalid_points(self):
        """Test: Menos de 3 puntos o valores no positivos"""
        with self.assertRaises(ValueError):
            fit_power_law([(1e-3, 1e-3), (1e-2, 1e-2)])
        with self.assertRaises(ValueError):
            fit_power_law([(1e-3, 1e-3), (1e-2, 0.0), (1e-1, 1e-1)])


class TestLeakageSweep(unittest.TestCase):
    """Tests del barrido de fuga sobre el fixture"""

    @classmethod
    def setUpClass(cls):
        """Configuración inicial (un único barrido para toda la clase)"""
        model = compile_circuit(load_circuit(CIRCUITS / "nested_mzi.circ"))
        cls.sweep = leakage_sweep(model, SelectionPair.for_model(model, 'D'))
        cls.model = model

    def test_first_order_arms(self):
        """Test: A, B y C escalan con exponente 1"""
        for arm in ('A', 'B', 'C'):
            self.assertLess(abs(self.sweep[arm].exponent - 1.0), 0.02, arm)

    def test_second_order_arms(self):
        """Test: E y F escalan con exponente 2"""
        for arm in ('E', 'F'):
            self.assertLess(abs(self.sweep[arm].exponent - 2.0), 0.05, arm)
            self.assertLess(abs(self.sweep[arm].probability_fit.exponent - 4.0), 0.1, arm)

    def test_ratio_increasing(self):
        """Test: El cociente F/B crece estrictamente con ε"""
        ratios = self.sweep.ratios['F/B']
        self.assertEqual(len(ratios), 7)
        for a, b in zip(ratios, ratios[1:]):
            self.assertGreater(b, a)

    def test_frame(self):
        """Test: Tabla larga con 5 brazos × 7 valores de ε"""
        frame = self.sweep.to_frame()
        self.assertEqual(list(frame.columns), ['arm', 'epsilon', 'trace', 'trace_probability'])
        self.assertEqual(len(frame), 35)
        self.assertEqual(set(self.sweep.exponents()), {'A', 'B', 'C', 'E', 'F'})

    def test_invalid_epsilons(self):
        """Test: ε no crecientes, nulos o ratios sobre brazos no marcados"""
        selection = SelectionPair.for_model(self.model, 'D')
        with self.assertRaises(ValueError):
            leakage_sweep(self.model, selection, [1e-3, 1e-4, 1e-2])
        with self.assertRaises(ValueError):
            leakage_sweep(self.model, selection, [0.0, 1e-3, 1e-2])
        with self.assertRaises(ValueError):
            leakage_sweep(self.model, selection, arms=['A', 'B'], ratio_pairs=[('F', 'B')])


if __name__ == "__main__":
    unittest.main(verbosity=2)
