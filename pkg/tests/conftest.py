import itertools

import pytest


def brute_irreducible(f, p):
    """No monic factor of degree 1..n/2, by trial division over all candidates."""
    from bhsets.algebra import poly_divmod, iter_monic

    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for g in iter_monic(p, d):
            _, r = poly_divmod(tuple(f), g, p)
            if not r:
                return False
    return True


def brute_counts(elements, N, h):
    """Representation counts over index tuples i_1 <= ... <= i_h."""
    counts = {}
    for combo in itertools.combinations_with_replacement(sorted(elements), h):
        t = sum(combo) % N
        counts[t] = counts.get(t, 0) + 1
    return counts


@pytest.fixture
def F9():
    from bhsets.algebra import FieldDescriptor

    return FieldDescriptor(3, 2, (2, 1, 1))


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line; printed again in the terminal summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    def record(label: str, ok: bool, detail: str = "", gated: bool = True):
        status = ("PASS" if ok else "FAIL") if gated else "INFO"
        line = f"{status}  {label}" + (f"  [{detail}]" if detail else "")
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
