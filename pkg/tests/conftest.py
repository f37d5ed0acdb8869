GATE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if GATE_LINES:
        terminalreporter.section("acceptance gate")
        for line in sorted(GATE_LINES):
            terminalreporter.write_line(line)
