from hypothesis import strategies as st

from ftadescent.gaussian import GaussianRational

ACCEPTANCE_LINES = []

rationals = st.fractions(max_denominator=10 ** 6).filter(lambda q: abs(q) < 10 ** 6)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(bool)


def record_criterion(name, ok, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
