from hypothesis import strategies as st

from arskit import FiniteArs, build_ars
from arskit.catalog import FINITE_SYSTEMS


@st.composite
def small_ars(draw, max_size=6):
    n = draw(st.integers(1, max_size))
    pairs = [(i, j) for i in range(n) for j in range(n)]
    steps = draw(st.lists(st.sampled_from(pairs), max_size=2 * n * n))
    return FiniteArs(tuple(f"x{i}" for i in range(n)), tuple(steps))


def chain(*names):
    return build_ars(names, list(zip(names, names[1:])))


CE = FINITE_SYSTEMS
DIAMOND = build_ars("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


ACCEPTANCE: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}" + (f": {detail}" if detail else "")
    ACCEPTANCE[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
