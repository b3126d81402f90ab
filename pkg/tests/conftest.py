import sys
from pathlib import Path

from hypothesis import settings, strategies as st

from z2bordism import Component, ManifoldDescriptor, ProjectiveFactor, TruncatedPoly

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def components(draw, m, max_factors=4):
    k = draw(st.integers(1, max_factors))
    cuts = sorted(draw(st.lists(st.integers(0, m), min_size=k - 1, max_size=k - 1)))
    edges = [0] + cuts + [m]
    dims = [b - a for a, b in zip(edges, edges[1:])]
    flags = draw(st.lists(st.booleans(), min_size=k, max_size=k))
    return Component(tuple(ProjectiveFactor(d, t) for d, t in zip(dims, flags)))


@st.composite
def descriptors(draw, min_dim=1, max_dim=6, max_components=3, m=None):
    if m is None:
        m = draw(st.integers(min_dim, max_dim))
    comps = draw(st.lists(components(m), min_size=0, max_size=max_components))
    return ManifoldDescriptor(m, tuple(comps))


@st.composite
def descriptor_pairs(draw, min_dim=1, max_dim=6):
    m = draw(st.integers(min_dim, max_dim))
    return draw(descriptors(m=m)), draw(descriptors(m=m))


@st.composite
def truncated_polys(draw, bounds):
    monos = draw(
        st.lists(st.tuples(*(st.integers(0, b - 1) for b in bounds)), max_size=12)
    )
    return TruncatedPoly.from_monomials(bounds, monos)


ring_bounds = st.lists(st.integers(1, 4), min_size=1, max_size=3).map(tuple)


# one PASS/FAIL line per acceptance criterion in the terminal summary

_criteria: dict[int, list[bool]] = {}
_titles: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    _titles[number] = title
    _criteria.setdefault(number, []).append(call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        runs = _criteria[number]
        status = "PASS" if all(runs) else "FAIL"
        detail = "" if all(runs) else f" ({runs.count(False)}/{len(runs)} checks failed)"
        terminalreporter.write_line(f"criterion {number:2d} {status}: {_titles[number]}{detail}")
