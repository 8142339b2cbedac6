import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def search_records():
    from srdef import spheres

    return spheres.star_search()


@pytest.fixture(scope="session")
def deltahedra():
    from srdef import spheres

    return spheres.deltahedra_series()


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, title, detail = RESULTS[n]
        line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
