import random

from hypothesis import settings, strategies as st

from gtx.scalars import Q
from gtx.tableaux import make_tableau

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

# fractional parts with pairwise non-integral differences
FRACS = [Q(j, 11) for j in range(1, 11)]


@st.composite
def generic_seeds(draw, n, strong=False):
    rows = []
    for i in range(1, n + 1):
        if i == n and not strong:
            fr = [draw(st.sampled_from(FRACS)) for _ in range(i)]
        else:
            fr = draw(st.permutations(FRACS))[:i]
        offs = [draw(st.integers(-3, 3)) for _ in range(i)]
        rows.append([f + o for f, o in zip(fr, offs)])
    return make_tableau(n, rows)


def random_generic_seed(n, rng: random.Random, strong=False):
    rows = []
    for i in range(1, n + 1):
        fr = rng.sample(FRACS, i) if (i < n or strong) else [rng.choice(FRACS) for _ in range(i)]
        rows.append([f + rng.randint(-3, 3) for f in fr])
    return make_tableau(n, rows)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
