from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from orthosym.partitions import Partition

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def partitions(max_size=6, max_rows=4):
    return (
        st.lists(st.integers(1, max_size), max_size=max_rows)
        .map(lambda rows: Partition(sorted(rows, reverse=True)))
        .filter(lambda p: p.size <= max_size)
    )


def rationals(lo=-6, hi=6, max_den=7, nonzero=False):
    q = st.builds(Fraction, st.integers(lo * max_den, hi * max_den), st.integers(1, max_den))
    return q.filter(lambda x: x != 0) if nonzero else q


def unit_rationals():
    """Rationals strictly inside (0, 1)."""
    return st.builds(lambda a, b: Fraction(a, a + b), st.integers(1, 9), st.integers(1, 9))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
