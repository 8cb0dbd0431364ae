import numpy as np
import pytest
from hypothesis import settings

from zetaexplicit.perron import integrand
from zetaexplicit.formulas import descriptor
from zetaexplicit.residues import residue_numeric_circle
from zetaexplicit.zeros import default_zeta_catalog

# one PASS/FAIL line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


@pytest.fixture(scope="session")
def catalog():
    return default_zeta_catalog()


@pytest.fixture(scope="session")
def rhos(catalog):
    return 0.5 + 1j * catalog.ordinates[:5]


def numeric_zero_residue(fid, rho, x, radius=0.1):
    """Sum of circle residues of F(s) x^s / s over every site attached to rho."""
    total = 0j
    for site in descriptor(fid).zero_sites:
        s0 = complex(site.at(rho))
        total += residue_numeric_circle(lambda s: integrand(fid, s, x), s0, radius, tol=1e-12).value
    return total


def relclose(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(b))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
