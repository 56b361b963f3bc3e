import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hopfext.core import RationalField
from hopfext import catalog

_acceptance_results: list[tuple[str, bool]] = []


def record_acceptance(label: str, ok: bool):
    _acceptance_results.append((label, ok))


@pytest.fixture(scope="session")
def Q():
    return RationalField()


@pytest.fixture(scope="session")
def kc2(Q):
    return catalog.build_cyclic(2, Q)


@pytest.fixture(scope="session")
def kc3(Q):
    return catalog.build_cyclic(3, Q)


@pytest.fixture(scope="session")
def ks3(Q):
    return catalog.build_s3(Q)


@pytest.fixture(scope="session")
def sweedler(Q):
    return catalog.build_sweedler(Q)


@pytest.fixture(scope="session")
def octonion(Q):
    return catalog.build_octonion_loop(Q)


@pytest.fixture(scope="session")
def inv_action(Q):
    return catalog.build_c2_inv_c3_action(Q)


@pytest.fixture(scope="session")
def pow_action(Q):
    return catalog.build_c4_pow_c5_action(Q)


@pytest.fixture(scope="session")
def inv_extension(inv_action):
    from hopfext.extensions import semidirect

    _, ext = semidirect(inv_action)
    return ext


@pytest.fixture(scope="session")
def pow_extension(pow_action):
    from hopfext.extensions import semidirect

    _, ext = semidirect(pow_action)
    return ext


@pytest.fixture(scope="session")
def sign_extension(Q):
    from hopfext.extensions import lambda_from_antipode

    a, b, alpha, e = catalog.sign_splitting(Q)
    return lambda_from_antipode(a, b, alpha, e)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for label, ok in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
