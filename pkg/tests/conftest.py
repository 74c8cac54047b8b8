from itertools import combinations, permutations

import pytest

from schubert_trace.minor_poset import Ambient, BiMinor, SchubertIndex


def brute_gamma(m, n):
    """All of Γ(X) straight from itertools, independent of the package enumerator."""
    A = Ambient(m, n)
    return [SchubertIndex(c, A) for c in combinations(range(1, n + 1), m)]


def brute_delta(m, n):
    A = Ambient(m, n)
    out = []
    for r in range(1, min(m, n) + 1):
        for rows in combinations(range(1, m + 1), r):
            for cols in combinations(range(1, n + 1), r):
                out.append(BiMinor(rows, cols, A))
    return out


def leibniz_det(M):
    """Determinant by the permutation expansion."""
    k = len(M)
    total = 0
    for perm in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        prod = 1
        for i in range(k):
            prod *= M[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


def ambients(max_m, max_n, schubert=True):
    for n in range(1, max_n + 1):
        for m in range(1, max_n + 1):
            if m > max_m or (schubert and m > n):
                continue
            yield m, n


@pytest.fixture
def ex1():
    """m=3, n=5, δ=[1 3 | 1 4]."""
    return BiMinor((1, 3), (1, 4), Ambient(3, 5))


@pytest.fixture
def ex2():
    """m=4, n=4, δ=[1 3 4 | 1 3 4]."""
    return BiMinor((1, 3, 4), (1, 3, 4), Ambient(4, 4))


@pytest.fixture
def ex3():
    """m=4, n=5, δ=[1 3 4 | 1 3 4]."""
    return BiMinor((1, 3, 4), (1, 3, 4), Ambient(4, 5))


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
