from pathlib import Path

import pytest

from eduseg import MarkerLexicon, bundled_lexicon

FIXTURES = Path(__file__).parent / "fixtures"
APPENDIX = Path(__file__).parent.parent / "src" / "eduseg" / "data" / "fr.txt"

AVIGNON = "La ville d'Avignon est la capitale du Vaucluse, qui est un département du sud de la France."


@pytest.fixture(scope="session")
def appendix_lexicon():
    return bundled_lexicon("fr")


@pytest.fixture(scope="session")
def qui_lexicon():
    return MarkerLexicon.from_markers(["qui"])


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and (report.when == "call" or (report.when == "setup" and report.outcome != "passed")):
        _ACCEPTANCE.append((marker.args[0], marker.args[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for key, desc, outcome in sorted(_ACCEPTANCE):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {key:<3} {desc}")
