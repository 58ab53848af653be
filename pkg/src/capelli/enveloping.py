"""The universal enveloping algebra U(gl(n)) in PBW normal form.

Elements are finite rational combinations of normal-ordered monomials in the
generators e_ij, where a monomial is a tuple of (i, j) pairs weakly
increasing in the lexicographic order on pairs.  Products are rewritten to
normal form with the commutation relation

    [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb

applied to adjacent out-of-order factors until none remain.  Coefficients
are exact ``Fraction`` values; zero coefficients are never stored, so
equality of elements is equality of term maps.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

Generator = tuple[int, int]
Monomial = tuple[Generator, ...]


def _first_descent(mono: Monomial) -> int:
    for k in range(len(mono) - 1):
        if mono[k] > mono[k + 1]:
            return k
    return -1


def _normalize(raw: Iterable[tuple[Monomial, Fraction]]) -> dict[Monomial, Fraction]:
    """Rewrite a bag of (monomial, coeff) pairs into the PBW term map.

    Worklist algorithm: each out-of-order adjacent pair e_ab e_cd is replaced
    by e_cd e_ab plus the (shorter) bracket terms, which are pushed back.
    Termination: every step either lowers the inversion count at fixed
    length or lowers the length.
    """
    normal: dict[Monomial, Fraction] = {}
    stack = [item for item in raw if item[1]]
    while stack:
        mono, coeff = stack.pop()
        k = _first_descent(mono)
        if k < 0:
            acc = normal.get(mono, 0) + coeff
            if acc:
                normal[mono] = acc
            else:
                normal.pop(mono, None)
            continue
        (a, b), (c, d) = mono[k], mono[k + 1]
        head, tail = mono[:k], mono[k + 2 :]
        stack.append((head + ((c, d), (a, b)) + tail, coeff))
        if b == c:
            stack.append((head + ((a, d),) + tail, coeff))
        if d == a:
            stack.append((head + ((c, b),) + tail, -coeff))
    return normal


def _term_sort_key(mono: Monomial) -> tuple[int, Monomial]:
    # Highest filtration degree first, then lexicographic on the generator
    # sequence; matches the order PBW expressions are conventionally written.
    return (-len(mono), mono)


class UglElement:
    """An immutable element of U(gl(n)), always in PBW normal form."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, Rational] | None = None):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        object.__setattr__(self, "n", n)
        raw = []
        for mono, coeff in (terms or {}).items():
            mono = tuple((int(i), int(j)) for i, j in mono)
            for i, j in mono:
                if not (1 <= i <= n and 1 <= j <= n):
                    raise ValueError(f"generator e[{i},{j}] out of range for n={n}")
            raw.append((mono, Fraction(coeff)))
        object.__setattr__(self, "terms", _normalize(raw))

    def __setattr__(self, name, value):
        raise AttributeError("UglElement is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "UglElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "UglElement":
        return cls(n, {(): Fraction(1)})

    @classmethod
    def generator(cls, n: int, i: int, j: int) -> "UglElement":
        return cls(n, {((i, j),): Fraction(1)})

    @classmethod
    def scalar(cls, n: int, value) -> "UglElement":
        return cls(n, {(): Fraction(value)})

    # -- ring structure ----------------------------------------------------

    def _check_ambient(self, other: "UglElement") -> None:
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other):
        if not isinstance(other, UglElement):
            return NotImplemented
        self._check_ambient(other)
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = merged.get(mono, 0) + coeff
            if acc:
                merged[mono] = acc
            else:
                del merged[mono]
        return self._wrap(merged)

    def __sub__(self, other):
        if not isinstance(other, UglElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self._wrap({mono: -coeff for mono, coeff in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UglElement):
            self._check_ambient(other)
            raw = [
                (ma + mb, ca * cb)
                for ma, ca in self.terms.items()
                for mb, cb in other.terms.items()
            ]
            return self._wrap(_normalize(raw))
        if isinstance(other, Rational):
            q = Fraction(other)
            if not q:
                return UglElement.zero(self.n)
            return self._wrap({mono: coeff * q for mono, coeff in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def _wrap(self, normal_terms: dict[Monomial, Fraction]) -> "UglElement":
        # Internal fast path: terms are already normalized and pruned.
        elem = object.__new__(UglElement)
        object.__setattr__(elem, "n", self.n)
        object.__setattr__(elem, "terms", normal_terms)
        return elem

    def __eq__(self, other):
        if not isinstance(other, UglElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- structure queries -------------------------------------------------

    def filtration_degree(self) -> int | None:
        """Length of the longest monomial; None for the zero element."""
        if not self.terms:
            return None
        return max(map(len, self.terms))

    def degree_part(self, k: int) -> "UglElement":
        """The sum of terms whose monomials have length exactly k."""
        return self._wrap(
            {mono: coeff for mono, coeff in self.terms.items() if len(mono) == k}
        )

    def commutator(self, other: "UglElement") -> "UglElement":
        return self * other - other * self

    def is_central(self) -> bool:
        """True iff the element commutes with every generator e_ij."""
        return all(
            not ad(i, j, self)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
        )

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: _term_sort_key(item[0]))

    # -- rendering and serialization ----------------------------------------

    def text(self) -> str:
        """Human-readable form, e.g. "−e[1,2]e[2,1] + e[1,1]".

        Terms appear by decreasing filtration degree, ties broken
        lexicographically on the generator sequence.  Unit coefficients are
        suppressed; signs are folded into the separators (U+2212 minus).
        """
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in self.sorted_terms():
            body = "".join(f"e[{i},{j}]" for i, j in mono)
            mag = abs(coeff)
            if not mono:
                chunk = str(mag)
            elif mag == 1:
                chunk = body
            else:
                chunk = f"{mag} · {body}"
            if not pieces:
                pieces.append(chunk if coeff > 0 else "−" + chunk)
            else:
                pieces.append((" + " if coeff > 0 else " − ") + chunk)
        return "".join(pieces)

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(coeff), "monomial": [[i, j] for i, j in mono]}
            for mono, coeff in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list[dict], n: int) -> "UglElement":
        terms: dict[Monomial, Fraction] = {}
        for entry in data:
            mono = tuple((int(i), int(j)) for i, j in entry["monomial"])
            terms[mono] = terms.get(mono, Fraction(0)) + Fraction(entry["coeff"])
        return cls(n, terms)

    def __repr__(self) -> str:
        return f"UglElement(n={self.n}, {self.text()})"


def ad(i: int, j: int, x: UglElement) -> UglElement:
    """Adjoint action of the generator e_ij: e_ij·x − x·e_ij."""
    return UglElement.generator(x.n, i, j).commutator(x)


def element_sum(n: int, elements: Iterator[UglElement] | Iterable[UglElement]) -> UglElement:
    """Exact sum of many elements without quadratic re-merging."""
    acc: dict[Monomial, Fraction] = {}
    for elem in elements:
        if elem.n != n:
            raise ValueError(f"ambient mismatch: n={n} vs n={elem.n}")
        for mono, coeff in elem.terms.items():
            total = acc.get(mono, 0) + coeff
            if total:
                acc[mono] = total
            else:
                del acc[mono]
    return UglElement(n, acc)
