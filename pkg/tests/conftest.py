import sys


def pytest_terminal_summary(terminalreporter):
    for module in list(sys.modules.values()):
        if (getattr(module, "__file__", None) or "").endswith("test_acceptance.py"):
            lines = getattr(module, "RESULTS", [])
            if lines:
                terminalreporter.section("acceptance criteria")
                for line in lines:
                    terminalreporter.write_line(line)
