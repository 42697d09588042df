import pytest

from epirules import EventSequence

# Canonical example timeline used throughout the tests, with letters mapped
# to ids: A=1, B=2, C=3, D=4, E=5, F=6.  Moment 2 is intentionally empty.
FIXTURE_SLOTS = [
    {4},
    set(),
    {1, 4},
    {1, 2},
    {4},
    {1, 2},
    {2, 3, 5},
    {5},
    {5},
    {1, 6},
    {1, 4},
    {6},
]

FIXTURE_TEXT = "4\n\n1 4\n1 2\n4\n1 2\n2 3 5\n5\n5\n1 6\n1 4\n6\n"

A, B, C, D, E, F = 1, 2, 3, 4, 5, 6


@pytest.fixture(scope="session")
def fig_seq() -> EventSequence:
    return EventSequence.from_slots(FIXTURE_SLOTS)


@pytest.fixture()
def fig_file(tmp_path):
    path = tmp_path / "fixture.txt"
    path.write_text(FIXTURE_TEXT, encoding="utf-8")
    return path
