from math import gcd

from cyclicmcm.hj import GroupParams


def coprime_pairs(nmax, nmin=2):
    return [GroupParams(n, a) for n in range(nmin, nmax + 1) for a in range(1, n) if gcd(n, a) == 1]


# criterion number -> (description, passed); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {k:>2}. {desc}")
