import hypothesis.strategies as st
from hypothesis import settings

from synprop import sampling

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def syn_morphisms(draw, max_m=3, max_extra=3):
    m = draw(st.integers(0, max_m))
    n = 0 if m == 0 else m + draw(st.integers(0, max_extra))
    return sampling.random_syn(draw(st.randoms(use_true_random=False)), m, n)


@st.composite
def syn_chain(draw, length=2, max_width=5):
    """``length`` composable forests."""
    rng = draw(st.randoms(use_true_random=False))
    sizes = sampling.random_syn_sizes(rng, length + 1, max_width)
    return [sampling.random_syn(rng, a, b) for a, b in zip(sizes, sizes[1:])]


@st.composite
def corelations(draw, max_side=3, m=None, n=None):
    m = draw(st.integers(0, max_side)) if m is None else m
    n = draw(st.integers(0, max_side)) if n is None else n
    return sampling.random_corel(draw(st.randoms(use_true_random=False)), m, n)


@st.composite
def cospans(draw, max_side=3, max_apex=5, m=None, n=None):
    m = draw(st.integers(0, max_side)) if m is None else m
    n = draw(st.integers(0, max_side)) if n is None else n
    rng = draw(st.randoms(use_true_random=False))
    return sampling.random_cospan(rng, m, n, max_apex)


@st.composite
def cocom_maps(draw, max_m=3, max_extra=3):
    m = draw(st.integers(0, max_m))
    n = 0 if m == 0 else m + draw(st.integers(0, max_extra))
    return sampling.random_cocom(draw(st.randoms(use_true_random=False)), m, n)
