import pytest

from ccs_tqft.groups import build_group

_criteria: dict[int, tuple[str, list[str]]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    num, text = crit
    _, outcomes = _criteria.setdefault(num, (text, []))
    outcomes.append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        rep.criterion = (mark.args[0], mark.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        text, outcomes = _criteria[num]
        ok = outcomes and all(o == "passed" for o in outcomes)
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {text}")


def quaternion_group():
    """Q8 from unit-quaternion arithmetic; index = 2*unit + (sign == -1).

    units 0..3 = 1, i, j, k, so index 0 is +1 and index 1 is -1.
    """
    # unit products: (a, b) -> (sign, unit)
    prod = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    def decode(x):
        return (-1 if x % 2 else 1), x // 2
    def encode(sign, unit):
        return 2 * unit + (1 if sign < 0 else 0)
    table = []
    for x in range(8):
        sx, ux = decode(x)
        row = []
        for y in range(8):
            sy, uy = decode(y)
            s, u = prod[ux, uy]
            row.append(encode(sx * sy * s, u))
        table.append(row)
    return build_group(8, table, "Q8")


@pytest.fixture(scope="session")
def q8():
    return quaternion_group()
