import pytest

from weyltile.tiling import GENERIC_GAMMAS, SYMMETRIC_GAMMA, klotz_patch, shadow_tiling_of_cell

PATCH_RADIUS = 9


@pytest.fixture(scope="session")
def shadow():
    return shadow_tiling_of_cell()


@pytest.fixture(scope="session")
def generic_patches():
    return [klotz_patch(gamma=g, radius=PATCH_RADIUS) for g in GENERIC_GAMMAS]


@pytest.fixture(scope="session")
def symmetric_patch():
    return klotz_patch(gamma=SYMMETRIC_GAMMA, radius=PATCH_RADIUS)


# acceptance summary: one line per criterion at the end of the run

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    entry = _CRITERIA.setdefault(number, {"title": title, "ok": True})
    if call.excinfo is not None:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {entry['title']}")
