import json
import pathlib
import sys

import pytest

HERE = pathlib.Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))


@pytest.fixture(scope="session")
def derived():
    return json.loads((HERE / "fixtures" / "derived.json").read_text())


def pytest_terminal_summary(terminalreporter):
    for name, module in list(sys.modules.items()):
        if name.rsplit(".", 1)[-1] == "test_acceptance" and getattr(module, "RESULTS", None):
            terminalreporter.section("acceptance criteria")
            for number in sorted(module.RESULTS):
                terminalreporter.write_line(module.RESULTS[number])
