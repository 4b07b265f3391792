from math import isqrt


def is_prime_trial(n: int) -> bool:
    """Trial division; deliberately independent of the sieve."""
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
