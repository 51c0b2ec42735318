"""Three-term recurrence for x^k X_n in the radial basis {X_0 = e, X_1, X_2, ...}.

Everything is driven by two integers: ``a`` in ``X1*X1 = X2 + a*e`` and
``b`` in ``X1*Xm = X(m+1) + b*X(m-1)`` for ``m >= 2``.  The group ring gives
``a = 2N`` and ``b = 2N - 1``; the printed text of the source uses
``b = N - 1``.  Both are available as presets and are never mixed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Any, Iterable, Sequence

from .words import check_rank

PAPER_TEXT = "paper-text"
VERIFIED = "verified"
CUSTOM = "custom"
MODES = (PAPER_TEXT, VERIFIED, CUSTOM)


@dataclass(frozen=True)
class RelationParams:
    N: int
    a: int
    b: int
    mode: str = CUSTOM

    def __post_init__(self):
        check_rank(self.N)
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == PAPER_TEXT and (self.a, self.b) != (2 * self.N, self.N - 1):
            raise ValueError("paper-text preset requires a = 2N, b = N - 1")
        if self.mode == VERIFIED and (self.a, self.b) != (2 * self.N, 2 * self.N - 1):
            raise ValueError("verified preset requires a = 2N, b = 2N - 1")

    @classmethod
    def paper_text(cls, N: int) -> "RelationParams":
        return cls(N, 2 * N, N - 1, PAPER_TEXT)

    @classmethod
    def verified(cls, N: int) -> "RelationParams":
        return cls(N, 2 * N, 2 * N - 1, VERIFIED)

    @classmethod
    def custom(cls, N: int, a: int, b: int) -> "RelationParams":
        return cls(N, a, b, CUSTOM)

    @classmethod
    def preset(cls, mode: str, N: int, a: int | None = None, b: int | None = None) -> "RelationParams":
        if mode == PAPER_TEXT:
            return cls.paper_text(N)
        if mode == VERIFIED:
            return cls.verified(N)
        if mode == CUSTOM:
            if a is None or b is None:
                raise ValueError("custom mode needs both a and b")
            return cls.custom(N, a, b)
        raise ValueError(f"unknown mode {mode!r}")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class RadialVector:
    """Coefficients of ``sum_j coeffs[j] * X_j``; trailing zeros are dropped."""

    coeffs: tuple[int, ...]
    params: RelationParams

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def basis(cls, params: RelationParams, j: int) -> "RadialVector":
        if j < 0:
            raise ValueError("basis index must be nonnegative")
        return cls((0,) * j + (1,), params)

    def __getitem__(self, j: int) -> int:
        if j < 0:
            return 0
        return self.coeffs[j] if j < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def nonzero(self) -> dict[int, int]:
        return {j: c for j, c in enumerate(self.coeffs) if c}

    def render(self) -> str:
        return render_terms(self.coeffs)

    def to_json(self) -> dict[str, Any]:
        p = self.params
        return {
            "N": p.N,
            "mode": p.mode,
            "a": str(p.a),
            "b": str(p.b),
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "RadialVector":
        params = RelationParams(int(data["N"]), int(data["a"]), int(data["b"]), data["mode"])
        return cls(tuple(int(c) for c in data["coeffs"]), params)


def _basis_name(j: int) -> str:
    return "e" if j == 0 else f"X{j}"


def render_terms(coeffs: Sequence[int]) -> str:
    """Human form, highest degree first: ``"X5 + 6*X3 + 9*X1"``.

    A leading coefficient of 1 is omitted; every other term shows its
    coefficient, including 1.
    """
    parts: list[str] = []
    for j in range(len(coeffs) - 1, -1, -1):
        c = coeffs[j]
        if not c:
            continue
        name = _basis_name(j)
        if not parts:
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        else:
            parts.append(f"{'-' if c < 0 else '+'} {abs(c)}*{name}")
    return " ".join(parts) if parts else "0"


def multiply_by_x(v: RadialVector) -> RadialVector:
    """One left multiplication by ``x = X_1``."""
    a, b = v.params.a, v.params.b
    top = len(v.coeffs) + 1
    out = [0] * top
    for j in range(top):
        if j == 0:
            out[0] = a * v[1]
        elif j == 1:
            out[1] = v[0] + b * v[2]
        else:
            out[j] = v[j - 1] + b * v[j + 1]
    return RadialVector(tuple(out), v.params)


def expand_xk_Xn(params: RelationParams, k: int, n: int) -> RadialVector:
    """``x**k * X_n`` by ``k`` single steps of :func:`multiply_by_x`."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be nonnegative")
    v = RadialVector.basis(params, n)
    for _ in range(k):
        v = multiply_by_x(v)
    return v


@lru_cache(maxsize=512)
def expand_power(params: RelationParams, k: int) -> RadialVector:
    """``x**k`` in the radial basis."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return RadialVector.basis(params, 0)
    return multiply_by_x(expand_power(params, k - 1))


def moment(params: RelationParams, k: int, n: int = 0) -> int:
    """Coefficient of ``e`` in ``x**k * X_n``; with ``n = 0`` this is the k-th moment of x."""
    return expand_xk_Xn(params, k, n)[0]


@dataclass(frozen=True)
class CoefficientSequence:
    p: int
    c: int
    entries: tuple[int, ...] = field(default=())

    def __getitem__(self, i: int) -> int:
        """One-based access, matching ``r_1 .. r_{p+1}``."""
        if not 1 <= i <= self.p + 1:
            raise IndexError(i)
        return self.entries[i - 1]


def coefficient_sequence(p: int, c: int) -> CoefficientSequence:
    """Row ``p`` of the Pascal-type triangle for ``(r + c)**p``.

    Built additively from row ``p - 1``: each entry is the one above-left
    plus ``c`` times the one above-right.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    row = [1]
    for _ in range(p):
        row = [(row[i] if i < len(row) else 0) + (c * row[i - 1] if i > 0 else 0) for i in range(len(row) + 1)]
    return CoefficientSequence(p, c, tuple(row))


def binomial_row(p: int, c: int) -> tuple[int, ...]:
    return tuple(comb(p, i) * c**i for i in range(p + 1))


def triangle(p: int, c: int) -> list[CoefficientSequence]:
    return [coefficient_sequence(i, c) for i in range(p + 1)]


def paper_expansion(N: int, k: int, n: int) -> RadialVector:
    """``x**k * X_n`` as the source's printed procedure computes it.

    For ``k <= n`` the binomial row of ``(r + (N-1))**k`` is laid on indices
    ``n+k, n+k-2, ..., n-k`` (this includes the ``e`` term when ``k = n``).
    For ``n = 0`` the powers of ``x`` come from the recurrence with
    ``a = 2N, b = N-1``.  For ``k > n > 0`` the ``k = n`` layer is peeled
    off and each resulting ``X_j`` is pushed through the same procedure with
    the remaining ``k - n`` factors.

    This reproduces the printed expansions; it is not the group-ring truth.
    """
    params = RelationParams.paper_text(N)
    return RadialVector(_paper_coeffs(N, k, n), params)


@lru_cache(maxsize=4096)
def _paper_coeffs(N: int, k: int, n: int) -> tuple[int, ...]:
    if k < 0 or n < 0:
        raise ValueError("k and n must be nonnegative")
    if n == 0:
        return expand_power(RelationParams.paper_text(N), k).coeffs
    if k <= n:
        out = [0] * (n + k + 1)
        for i, r in enumerate(coefficient_sequence(k, N - 1).entries):
            out[n + k - 2 * i] += r
        return tuple(out)
    out = [0] * (n + k + 1)
    for i, r in enumerate(coefficient_sequence(n, N - 1).entries):
        if r:
            for j, c in enumerate(_paper_coeffs(N, k - n, 2 * n - 2 * i)):
                out[j] += r * c
    return tuple(out)


def paper_trace_closed_form(N: int, k: int, n: int) -> int:
    """The trace of ``x**k * X_n`` that the source's formulas claim.

    ``(N-1)**n`` when ``k = n``, zero when ``n > k``, and for ``k > n`` the
    peel-and-recurse reduction: terms ``x**k' * X_j`` with ``k' < j`` are
    dropped as traceless and the ``tau(x**k')`` leaves come from the
    ``b = N-1`` recurrence.
    """
    check_rank(N)
    if k < 0 or n < 0:
        raise ValueError("k and n must be nonnegative")
    if n > k or (k - n) % 2:
        return 0
    if k == n:
        return (N - 1) ** n
    if n == 0:
        return moment(RelationParams.paper_text(N), k)
    rest = k - n
    total = 0
    for i, r in enumerate(coefficient_sequence(n, N - 1).entries):
        j = 2 * n - 2 * i
        if rest < j:
            continue
        total += r * paper_trace_closed_form(N, rest, j)
    return total


def reduce_alternating_word(spec: Sequence[tuple[int, int]]) -> tuple[int, tuple[int, ...]]:
    """Collect the x-powers of ``x^k1 X_n1 ... x^km X_nm`` into one exponent.

    Returns ``(k1 + ... + km, (n1, ..., nm))``.  Zero indices are kept; they
    stand for ``X_0 = e``.
    """
    ks = [k for k, _ in spec]
    ns = tuple(n for _, n in spec)
    if any(k < 0 for k in ks) or any(n < 0 for n in ns):
        raise ValueError("exponents and indices must be nonnegative")
    return sum(ks), ns
