"""Collects the one-line verdicts emitted by the acceptance suite."""

import pytest

_VERDICTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_VERDICTS] = []


class Verdicts:
    def __init__(self, store, capman):
        self._store = store
        self._capman = capman

    def record(self, label: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        self._store.append(line)
        with self._capman.global_and_fixture_disabled():
            print("\n" + line, flush=True)
        return ok


@pytest.fixture
def verdict(request):
    capman = request.config.pluginmanager.getplugin("capturemanager")
    return Verdicts(request.config.stash[_VERDICTS], capman)


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_VERDICTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
