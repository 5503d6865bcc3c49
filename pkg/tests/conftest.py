import random
from fractions import Fraction

import pytest

from dihedral_kummer import fixtures as fxmod
from dihedral_kummer.cubic import cubic_family, fixed_disc_curve
from dihedral_kummer.quintic import family


def small_rational(rng, num=30, den=12):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def fx():
    return {name: fxmod.load(name) for name in fxmod.NAMES}


@pytest.fixture(scope="session")
def fam10():
    return family(1, 0)


@pytest.fixture(scope="session")
def fam22():
    return family(2, 2)


@pytest.fixture(scope="session")
def fam118():
    return family(1, -18)


@pytest.fixture(scope="session")
def cub11():
    return cubic_family(1, 1)


@pytest.fixture(scope="session")
def fdD():
    return fixed_disc_curve(-3321607)


@pytest.fixture(scope="session")
def bases10(fx):
    return fxmod.bases(fx["quintic_1_0"])


@pytest.fixture(scope="session")
def bases22(fx):
    return fxmod.bases(fx["quintic_2_2"])


@pytest.fixture(scope="session")
def bases118(fx):
    return fxmod.bases(fx["quintic_1_-18"])


@pytest.fixture(scope="session")
def bases11(fx):
    return fxmod.bases(fx["cubic_1_1"])


@pytest.fixture(scope="session")
def basesD(fx):
    return fxmod.bases(fx["cubic_D_-3321607"])


# --------------------------------------------------------------------------
# acceptance reporting: one PASS/FAIL line per criterion
# --------------------------------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _criteria.setdefault(n, []).append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        parts = _criteria[n]
        ok = all(p for _, p in parts)
        failed = [name for name, p in parts if not p]
        tail = f"  (failing: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}{tail}")
