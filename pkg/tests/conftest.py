import re

from hypothesis import settings

settings.register_profile("suite", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("suite")

_CRITERION = re.compile(r"test_criterion_(\d+)_([a-z0-9_]+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion."""
    seen = {}
    for key, reports in terminalreporter.stats.items():
        for rep in reports:
            nodeid = getattr(rep, "nodeid", "")
            match = _CRITERION.search(nodeid)
            if match is None:
                continue
            if getattr(rep, "when", "call") not in ("call", "setup"):
                continue
            num, slug = int(match.group(1)), match.group(2)
            bad = key not in ("passed", "")
            prev_slug, prev_bad = seen.get(num, (slug, False))
            seen[num] = (prev_slug, prev_bad or bad)
    if not seen:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(seen):
        slug, bad = seen[num]
        verdict = "FAIL" if bad else "PASS"
        terminalreporter.write_line(f"criterion {num} ({slug}): {verdict}")
