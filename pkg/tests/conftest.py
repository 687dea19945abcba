import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from starmonoid.ptrans import UNDEF, PartialMap

# Fixed seed for every property test: reruns see the same examples.
settings.register_profile("ci", derandomize=True, max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


@st.composite
def partial_maps(draw, n=None, min_n=3, max_n=6):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    entries = draw(st.lists(st.integers(UNDEF, n - 1), min_size=n, max_size=n))
    return PartialMap(tuple(entries))


@st.composite
def map_triples(draw, min_n=3, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(partial_maps(n=n)) for _ in range(3))


# Acceptance lines, printed once at the end of the run.
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
