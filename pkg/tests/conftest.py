import pytest
from hypothesis import HealthCheck, settings

from hopfhc.algebras import Sweedler4, cyclic_group_algebra, s3_group_algebra
from hopfhc.coefficients import coalgebra_self, modular_pair, trivial

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def sw():
    return Sweedler4()


@pytest.fixture(scope="session")
def kc2():
    return cyclic_group_algebra(2)


@pytest.fixture(scope="session")
def ks3():
    return s3_group_algebra()


@pytest.fixture(scope="session")
def sw_mp(sw):
    # modular pair (eps, g): the SaYD coefficient over sweedler4
    return modular_pair(sw, {}, (1, 0))


@pytest.fixture(scope="session")
def sw_self(sw):
    return coalgebra_self(sw)


@pytest.fixture(scope="session")
def sw_triv(sw):
    return trivial(sw)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
