ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        name, ok, detail = ACCEPTANCE[num]
        line = f"{'PASS' if ok else 'FAIL'} criterion {num:>2}: {name}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
