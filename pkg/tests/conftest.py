"""Independent reference computations shared by the test modules.

Nothing here imports the package's word or product code: words are tuples
of signed ints reduced with a stack, and moments of x are counted as
weighted Dyck paths on the 2N-regular tree.
"""

from collections import Counter
from functools import lru_cache
from itertools import product

from hypothesis import strategies as st


def naive_reduce(seq):
    out = []
    for letter in seq:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def naive_words(N, n):
    letters = [s * g for g in range(1, N + 1) for s in (1, -1)]
    return [w for w in product(letters, repeat=n) if naive_reduce(w) == w]


def naive_X(N, n):
    return Counter({w: 1 for w in naive_words(N, n)})


def naive_mul(p, q):
    out = Counter()
    for u, a in p.items():
        for v, b in q.items():
            out[naive_reduce(u + v)] += a * b
    return {w: c for w, c in out.items() if c}


def naive_xk_Xn(N, k, n):
    p = dict(naive_X(N, n))
    x = naive_X(N, 1)
    for _ in range(k):
        p = naive_mul(x, p)
    return p


def to_text(word):
    """Tuple of signed ints to the package's letter encoding."""
    return "".join(chr(ord("a") + abs(l) - 1) if l > 0 else chr(ord("A") + abs(l) - 1) for l in word)


def dyck_moment(N, k):
    """Closed walks of length k from the root of the 2N-regular tree.

    A step away from the root has 2N choices, any other outward step
    2N - 1, each inward step exactly one.
    """
    if k % 2:
        return 0

    @lru_cache(maxsize=None)
    def walks(steps_left, height):
        if height < 0 or height > steps_left:
            return 0
        if steps_left == 0:
            return 1
        up = (2 * N if height == 0 else 2 * N - 1) * walks(steps_left - 1, height + 1)
        down = walks(steps_left - 1, height - 1) if height > 0 else 0
        return up + down

    return walks(k, 0)


def word_texts(N, max_len=4):
    alphabet = "".join(chr(ord("a") + i) + chr(ord("A") + i) for i in range(N))
    return st.text(alphabet=alphabet, max_size=max_len)


@st.composite
def elements(draw, N=2, max_terms=15, max_len=4):
    from radial.algebra import AlgebraElement

    keys = draw(st.lists(word_texts(N, max_len), max_size=max_terms))
    coeffs = draw(st.lists(st.integers(-50, 50), min_size=len(keys), max_size=len(keys)))
    return AlgebraElement(N, list(zip(keys, coeffs)))



ACCEPTANCE_LINES = []


def record_criterion(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
