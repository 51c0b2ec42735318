"""Sparse integer group ring Z[F_N], used as the brute-force oracle.

Elements map reduced words (by their text) to nonzero Python ints.  Products
are plain convolutions with free reduction at the seam, so nothing here
knows about radial elements beyond how to build them and read them back.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from types import MappingProxyType
from typing import Any

from . import words as W
from .budget import DEFAULT_WORD_LIMIT, BudgetExceededError, product_limit


class RadialStructureError(ValueError):
    """An element that was expected to be radial is not."""


class AlgebraElement:
    """A finitely supported integer combination of elements of F_N."""

    __slots__ = ("N", "_terms")

    def __init__(self, N: int, terms: Mapping[str, int] | Iterable[tuple[str, int]] = (), *, _trusted=False):
        W.check_rank(N)
        self.N = N
        if _trusted:
            self._terms = terms
            return
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[str, int] = {}
        for key, c in items:
            text = key.text if isinstance(key, W.ReducedWord) else W.ReducedWord.parse(key).text
            if W.ReducedWord(text).rank > N:
                raise ValueError(f"word {text!r} uses a generator outside F_{N}")
            acc[text] = acc.get(text, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, N: int, terms: dict[str, int]) -> "AlgebraElement":
        return cls(N, terms, _trusted=True)

    @property
    def terms(self) -> Mapping[str, int]:
        return MappingProxyType(self._terms)

    def coefficient(self, word: W.ReducedWord | str) -> int:
        text = word.text if isinstance(word, W.ReducedWord) else W.ReducedWord.parse(word).text
        return self._terms.get(text, 0)

    def sorted_items(self) -> list[tuple[str, int]]:
        return sorted(self._terms.items(), key=lambda kv: W.word_sort_key(kv[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.N == other.N and self._terms == other._terms

    def __hash__(self):
        return hash((self.N, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{k or W.IDENTITY_TEXT}" for k, c in self.sorted_items()[:8])
        more = "" if len(self) <= 8 else f" + ... ({len(self)} terms)"
        return f"AlgebraElement(N={self.N}, {body or '0'}{more})"

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return add(self, other)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return add(self, other.scale(-1))

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int) -> "AlgebraElement":
        if c == 0:
            return AlgebraElement._raw(self.N, {})
        return AlgebraElement._raw(self.N, {k: v * c for k, v in self._terms.items()})

    def adjoint(self) -> "AlgebraElement":
        return adjoint(self)

    def trace(self) -> int:
        return trace(self)

    def to_json(self) -> dict[str, Any]:
        return {
            "N": self.N,
            "terms": [{"word": k or W.IDENTITY_TEXT, "coeff": str(c)} for k, c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "AlgebraElement":
        return cls(int(data["N"]), [(t["word"], int(t["coeff"])) for t in data["terms"]])


def _same_rank(p: AlgebraElement, q: AlgebraElement) -> None:
    if p.N != q.N:
        raise ValueError(f"elements live in different groups: F_{p.N} and F_{q.N}")


def zero(N: int) -> AlgebraElement:
    return AlgebraElement._raw(N, {})


def identity(N: int, c: int = 1) -> AlgebraElement:
    return AlgebraElement(N, {"": c})


def add(p: AlgebraElement, q: AlgebraElement) -> AlgebraElement:
    _same_rank(p, q)
    out = dict(p._terms)
    for k, c in q._terms.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return AlgebraElement._raw(p.N, out)


def mul(p: AlgebraElement, q: AlgebraElement, limit: int | None = None) -> AlgebraElement:
    """Convolution product ``p * q``.

    The work is ``len(p) * len(q)`` accumulation events; exceeding the
    product budget raises before anything is computed.
    """
    _same_rank(p, q)
    cap = product_limit(limit)
    events = len(p) * len(q)
    if events > cap:
        raise BudgetExceededError("group-ring product", events, cap)
    concat = W.concat_text
    out: dict[str, int] = {}
    get = out.get
    right = list(q._terms.items())
    for u, a in p._terms.items():
        for v, b in right:
            w = concat(u, v)
            out[w] = get(w, 0) + a * b
    return AlgebraElement._raw(p.N, {k: c for k, c in out.items() if c})


def adjoint(p: AlgebraElement) -> AlgebraElement:
    return AlgebraElement._raw(p.N, {W.invert_text(k): c for k, c in p._terms.items()})


def trace(p: AlgebraElement) -> int:
    """Canonical trace: the coefficient of the identity."""
    return p._terms.get("", 0)


def build_X(N: int, n: int, limit: int = DEFAULT_WORD_LIMIT) -> AlgebraElement:
    """Sum of all reduced words of length ``n``; ``build_X(N, 1)`` is the generating operator."""
    W.check_rank(N)
    count = W.word_count(N, n)
    if count > limit:
        raise BudgetExceededError(f"building X_{n} in F_{N}", count, limit)
    return AlgebraElement._raw(N, dict.fromkeys(W.iter_word_texts(N, n), 1))


def generating_operator(N: int) -> AlgebraElement:
    return build_X(N, 1)


def left_multiply_by_x(p: AlgebraElement, limit: int | None = None) -> AlgebraElement:
    """``x * p`` for the generating operator ``x``, without materializing ``x``."""
    return mul(generating_operator(p.N), p, limit)


def right_multiply_by_x(p: AlgebraElement, limit: int | None = None) -> AlgebraElement:
    return mul(p, generating_operator(p.N), limit)


def x_power(N: int, k: int, limit: int | None = None) -> AlgebraElement:
    """``x**k`` by repeated left multiplication."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    out = identity(N)
    for _ in range(k):
        out = left_multiply_by_x(out, limit)
    return out


def xk_times(p: AlgebraElement, k: int, limit: int | None = None) -> AlgebraElement:
    for _ in range(k):
        p = left_multiply_by_x(p, limit)
    return p


def times_xk(p: AlgebraElement, k: int, limit: int | None = None) -> AlgebraElement:
    for _ in range(k):
        p = right_multiply_by_x(p, limit)
    return p


def oracle_xk_Xn(N: int, k: int, n: int, limit: int | None = None) -> AlgebraElement:
    """``x**k * X_n`` computed entirely in the group ring."""
    return xk_times(build_X(N, n), k, limit)


def radial_profile(p: AlgebraElement) -> dict[int, int]:
    """Read ``p`` back as a combination of the ``X_j``.

    Words are grouped by length; each length class must be complete (all
    ``word_count(N, j)`` words present) and carry one common coefficient,
    otherwise :class:`RadialStructureError` is raised.
    """
    coeff: dict[int, int] = {}
    count: dict[int, int] = {}
    for w, c in p._terms.items():
        j = len(w)
        prev = coeff.setdefault(j, c)
        if prev != c:
            raise RadialStructureError(f"length-{j} words carry different coefficients ({prev} and {c})")
        count[j] = count.get(j, 0) + 1
    for j, seen in count.items():
        expected = W.word_count(p.N, j)
        if seen != expected:
            raise RadialStructureError(f"only {seen} of {expected} words of length {j} are present")
    return dict(sorted(coeff.items()))


def from_radial(N: int, coeffs: Iterable[int], limit: int = DEFAULT_WORD_LIMIT) -> AlgebraElement:
    """``sum_j coeffs[j] * X_j`` as an explicit group-ring element."""
    out: dict[str, int] = {}
    for j, c in enumerate(coeffs):
        if c:
            for w in build_X(N, j, limit)._terms:
                out[w] = c
    return AlgebraElement._raw(N, out)
