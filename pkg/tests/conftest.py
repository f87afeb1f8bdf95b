import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_acceptance_lines = []


def pytest_runtest_logreport(report):
    if report.when == "call":
        _acceptance_lines.extend(v for k, v in report.user_properties if k == "acceptance")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def spectrum20():
    from ptcubic.shooting import spectrum

    return spectrum(20)


@pytest.fixture(scope="session")
def fd_spectrum():
    """Finite-difference oracle for the five lowest eigenvalues."""
    from oracles import finite_difference_eigenvalues
    from ptcubic.closedform import wkb_energy

    return finite_difference_eigenvalues([wkb_energy(j) for j in range(5)])
