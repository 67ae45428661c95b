import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo", deadline=None, max_examples=40, derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def sl2():
    from opsplit.averaging import AveragingLieAlgebra, induced_leibniz
    from opsplit.catalog import golden_tables, sl2_averaging, sl2_bracket, sl2_form, table_tensor

    gold = golden_tables()
    c, P, B = sl2_bracket(), sl2_averaging(), sl2_form()
    return {
        "bracket": c,
        "P": P,
        "B": B,
        "circ": induced_leibniz(AveragingLieAlgebra(c, P)),
        "leibniz_table": table_tensor(gold["leibniz"]),
        "succ_table": table_tensor(gold["succ"]),
        "prec_table": table_tensor(gold["prec"]),
    }


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
