import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from wnmap.ingest import SenseIndex, SynsetId  # noqa: E402

_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if not marker:
        return
    number, title = marker
    outcome = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
    # a criterion with several tests fails if any of them fails
    prev = _criteria.get(number, (title, "PASS"))[1]
    if prev == "FAIL" or outcome == "FAIL":
        outcome = "FAIL"
    elif prev == "SKIP" and outcome == "PASS":
        outcome = "SKIP"
    _criteria[number] = (_criteria.get(number, (title,))[0], outcome)


@pytest.fixture(autouse=True)
def _record_criterion(request):
    marker = request.node.get_closest_marker("criterion")
    if marker is not None:
        request.node.user_properties.append(("criterion", tuple(marker.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        terminalreporter.write_line(f"[{outcome}] AC{number:>2} {title}")


def make_index(entries, label="", scheme="offset"):
    """Build a SenseIndex from ``{sense key: 'OOOOOOOO-p'}``."""
    index = SenseIndex(version_label=label, scheme=scheme)
    index.entries.update({k: SynsetId(v) for k, v in entries.items()})
    return index
