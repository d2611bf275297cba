import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=lambda k: (int(k.split(".")[0]), k)):
        ok, elapsed, note = results[key]
        terminalreporter.line(f"criterion {key:<4} {'PASS' if ok else 'FAIL'}  {elapsed:7.2f}s  {note}")
