"""The polynomial algebra C[M_{n,d}] and the polarization action of U(gl(n)).

Variables are (i|phi) for a row index i in 1..n and a place index phi in
1..d; a monomial is a dense exponent vector of length n*d with variable
(i|phi) at slot (i-1)*d + (phi-1).  On top of plain arithmetic the module
provides biproducts (signed minors), bitableaux, right symmetrized
bitableaux, immanants, straightening into the standard bitableau basis, and
the polarization operators that realize U(gl(n)) as differential operators —
the independent model every enveloping-algebra construction is checked
against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .characters import character, dim_irrep
from .tableaux import (
    Tableau,
    check_partition,
    column_permuted_family,
    conjugate,
    enumerate_standard,
    partitions_of,
    permutation_sign,
)

ExpVec = tuple[int, ...]


class MPoly:
    """A polynomial in the variables (i|phi) with exact rational coefficients."""

    __slots__ = ("n", "d", "terms")

    def __init__(self, n: int, d: int, terms: Mapping[ExpVec, Rational] | None = None):
        if n < 1 or d < 1:
            raise ValueError(f"ambient sizes must be positive, got n={n}, d={d}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        size = n * d
        cleaned: dict[ExpVec, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(map(int, exp))
            if len(exp) != size or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for n*d={size}")
            coeff = Fraction(coeff)
            if coeff:
                acc = cleaned.get(exp, 0) + coeff
                if acc:
                    cleaned[exp] = acc
                else:
                    del cleaned[exp]
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int, d: int) -> "MPoly":
        return cls(n, d)

    @classmethod
    def one(cls, n: int, d: int) -> "MPoly":
        exp = (0,) * (n * d)
        return cls(n, d, {exp: Fraction(1)})

    @classmethod
    def variable(cls, n: int, d: int, i: int, phi: int) -> "MPoly":
        if not (1 <= i <= n and 1 <= phi <= d):
            raise ValueError(f"variable ({i}|{phi}) out of range for ({n},{d})")
        exp = [0] * (n * d)
        exp[(i - 1) * d + (phi - 1)] = 1
        return cls(n, d, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, n: int, d: int, pairs: Iterable[tuple[int, int]]) -> "MPoly":
        """The product of the variables (i|phi) over the given pairs."""
        exp = [0] * (n * d)
        for i, phi in pairs:
            if not (1 <= i <= n and 1 <= phi <= d):
                raise ValueError(f"variable ({i}|{phi}) out of range for ({n},{d})")
            exp[(i - 1) * d + (phi - 1)] += 1
        return cls(n, d, {tuple(exp): Fraction(1)})

    def _wrap(self, terms: dict[ExpVec, Fraction]) -> "MPoly":
        poly = object.__new__(MPoly)
        object.__setattr__(poly, "n", self.n)
        object.__setattr__(poly, "d", self.d)
        object.__setattr__(poly, "terms", terms)
        return poly

    # -- arithmetic --------------------------------------------------------

    def _check_ambient(self, other: "MPoly") -> None:
        if self.n != other.n or self.d != other.d:
            raise ValueError(
                f"ambient mismatch: ({self.n},{self.d}) vs ({other.n},{other.d})"
            )

    def __add__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_ambient(other)
        merged = dict(self.terms)
        for exp, coeff in other.terms.items():
            acc = merged.get(exp, 0) + coeff
            if acc:
                merged[exp] = acc
            else:
                del merged[exp]
        return self._wrap(merged)

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self._wrap({exp: -coeff for exp, coeff in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MPoly):
            self._check_ambient(other)
            out: dict[ExpVec, Fraction] = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    key = tuple(x + y for x, y in zip(ea, eb))
                    acc = out.get(key, 0) + ca * cb
                    if acc:
                        out[key] = acc
                    else:
                        del out[key]
            return self._wrap(out)
        if isinstance(other, Rational):
            q = Fraction(other)
            if not q:
                return MPoly.zero(self.n, self.d)
            return self._wrap({exp: coeff * q for exp, coeff in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return (self.n, self.d, self.terms) == (other.n, other.d, other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash((self.n, self.d, frozenset(self.terms.items())))

    # -- calculus and structure --------------------------------------------

    def diff(self, i: int, phi: int) -> "MPoly":
        """Partial derivative with respect to the variable (i|phi)."""
        idx = (i - 1) * self.d + (phi - 1)
        out: dict[ExpVec, Fraction] = {}
        for exp, coeff in self.terms.items():
            e = exp[idx]
            if e:
                key = exp[:idx] + (e - 1,) + exp[idx + 1 :]
                acc = out.get(key, 0) + coeff * e
                if acc:
                    out[key] = acc
                else:
                    del out[key]
        return self._wrap(out)

    def total_degree(self) -> int | None:
        """Maximum monomial degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(exp) for exp in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(exp) for exp in self.terms}) <= 1

    def degree_part(self, k: int) -> "MPoly":
        return self._wrap(
            {exp: coeff for exp, coeff in self.terms.items() if sum(exp) == k}
        )

    def row_degrees(self, exp: ExpVec) -> tuple[int, ...]:
        """Degree in each letter row 1..n of one exponent vector."""
        d = self.d
        return tuple(sum(exp[(i - 1) * d : i * d]) for i in range(1, self.n + 1))

    def col_degrees(self, exp: ExpVec) -> tuple[int, ...]:
        """Degree in each place column 1..d of one exponent vector."""
        d = self.d
        return tuple(sum(exp[phi - 1 :: d]) for phi in range(1, d + 1))

    def variables_of(self, exp: ExpVec) -> list[tuple[int, int]]:
        """The (i|phi) pairs of one exponent vector, with multiplicity."""
        d = self.d
        pairs = []
        for idx, e in enumerate(exp):
            if e:
                pairs.extend([(idx // d + 1, idx % d + 1)] * e)
        return pairs

    def sorted_terms(self) -> list[tuple[ExpVec, Fraction]]:
        def key(item):
            exp = item[0]
            seq = tuple(
                idx for idx, e in enumerate(exp) for _ in range(e)
            )
            return (-sum(exp), seq)

        return sorted(self.terms.items(), key=key)

    # -- rendering and serialization ----------------------------------------

    def text(self) -> str:
        """Readable form like "x[1,1]x[2,2] − x[1,2]x[2,1]"; same term order
        and sign conventions as UglElement.text()."""
        if not self.terms:
            return "0"
        d = self.d
        pieces = []
        for exp, coeff in self.sorted_terms():
            factors = []
            for idx, e in enumerate(exp):
                if e:
                    i, phi = idx // d + 1, idx % d + 1
                    factors.append(f"x[{i},{phi}]" + (f"^{e}" if e > 1 else ""))
            body = "".join(factors)
            mag = abs(coeff)
            if not body:
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
        d = self.d
        out = []
        for exp, coeff in self.sorted_terms():
            mono = [
                [idx // d + 1, idx % d + 1, e] for idx, e in enumerate(exp) if e
            ]
            out.append({"coeff": str(coeff), "monomial": mono})
        return out

    @classmethod
    def from_json(cls, data: list[dict], n: int, d: int) -> "MPoly":
        terms: dict[ExpVec, Fraction] = {}
        for entry in data:
            exp = [0] * (n * d)
            for i, phi, e in entry["monomial"]:
                exp[(int(i) - 1) * d + (int(phi) - 1)] += int(e)
            key = tuple(exp)
            terms[key] = terms.get(key, Fraction(0)) + Fraction(entry["coeff"])
        return cls(n, d, terms)

    def __repr__(self) -> str:
        return f"MPoly(n={self.n}, d={self.d}, {self.text()})"


def poly_sum(n: int, d: int, polys: Iterable[MPoly]) -> MPoly:
    """Exact sum of many polynomials without quadratic re-merging."""
    acc: dict[ExpVec, Fraction] = {}
    for p in polys:
        if p.n != n or p.d != d:
            raise ValueError(f"ambient mismatch: ({n},{d}) vs ({p.n},{p.d})")
        for exp, coeff in p.terms.items():
            total = acc.get(exp, 0) + coeff
            if total:
                acc[exp] = total
            else:
                del acc[exp]
    return MPoly(n, d, acc)


# -- bideterminants and bitableaux ------------------------------------------


def biproduct(n: int, d: int, letters: Sequence[int], places: Sequence[int]) -> MPoly:
    """The signed minor (-1)^C(p,2) det[(letters_r | places_s)].

    Zero when the words have different lengths.
    """
    letters, places = tuple(letters), tuple(places)
    if len(letters) != len(places):
        return MPoly.zero(n, d)
    p = len(letters)
    sign = -1 if comb(p, 2) % 2 else 1
    terms: dict[ExpVec, Fraction] = {}
    for perm in itertools.permutations(range(p)):
        exp = [0] * (n * d)
        for s in range(p):
            exp[(letters[perm[s]] - 1) * d + (places[s] - 1)] += 1
        key = tuple(exp)
        coeff = Fraction(sign * permutation_sign(perm))
        acc = terms.get(key, 0) + coeff
        if acc:
            terms[key] = acc
        else:
            del terms[key]
    return MPoly(n, d, terms)


def column_monomial(n: int, d: int, lefts: Sequence[int], rights: Sequence[int]) -> MPoly:
    """The plain product (i_1|j_1)...(i_h|j_h)."""
    if len(lefts) != len(rights):
        raise ValueError("column words must have equal length")
    return MPoly.monomial(n, d, zip(lefts, rights))


def column_sign(h: int) -> int:
    return -1 if comb(h, 2) % 2 else 1


def column_bitableau(n: int, d: int, lefts: Sequence[int], rights: Sequence[int]) -> MPoly:
    """Depth-h column bitableau: (-1)^C(h,2) (i_1|j_1)...(i_h|j_h)."""
    return column_monomial(n, d, lefts, rights) * column_sign(len(lefts))


def crossing_sign(shape: Sequence[int]) -> int:
    """Sign of a bitableau relative to the product of its row biproducts."""
    exponent = sum(
        shape[p] * shape[q] for p in range(1, len(shape)) for q in range(p)
    )
    return -1 if exponent % 2 else 1


def bitableau(n: int, d: int, left: Tableau, right: Tableau) -> MPoly:
    """Signed product of row biproducts; zero when the shapes differ."""
    if left.shape != right.shape:
        return MPoly.zero(n, d)
    result = MPoly.one(n, d) * crossing_sign(left.shape)
    for lrow, rrow in zip(left.rows, right.rows):
        result = result * biproduct(n, d, lrow, rrow)
    return result


def expand_into_columns(
    left: Tableau, right: Tableau
) -> list[tuple[int, tuple[tuple[int, ...], tuple[int, ...]]]]:
    """Expansion of a bitableau into full-depth column pairs.

    One term per tuple of row permutations of the left tableau; the sign is
    the product of the permutation signs, and the cells are read column by
    column, top to bottom.  Summing sign * column_bitableau over the result
    reproduces bitableau(left, right) exactly.
    """
    if left.shape != right.shape:
        return []
    shape = left.shape
    out = []
    per_row = [itertools.permutations(range(k)) for k in shape]
    for perms in itertools.product(*per_row):
        sign = 1
        for perm in perms:
            sign *= permutation_sign(perm)
        lefts, rights = [], []
        for c in range(shape[0] if shape else 0):
            for r, k in enumerate(shape):
                if c < k:
                    lefts.append(left.rows[r][perms[r][c]])
                    rights.append(right.rows[r][c])
        out.append((sign, (tuple(lefts), tuple(rights))))
    return out


def right_symmetrized(n: int, d: int, left: Tableau, right: Tableau) -> MPoly:
    """Sum of bitableau(left, rbar) over all column permutations rbar of right,
    counted with multiplicity."""
    return poly_sum(
        n, d, (bitableau(n, d, left, rbar) for rbar in column_permuted_family(right))
    )


def _row_major_blocks(shape: Sequence[int]) -> tuple[list[list[int]], list[list[int]]]:
    """Row and column blocks of cell positions 0..h-1 under row-major filling."""
    rows, offset = [], 0
    for k in shape:
        rows.append(list(range(offset, offset + k)))
        offset += k
    cols = [
        [rows[r][c] for r, k in enumerate(shape) if c < k]
        for c in range(shape[0] if shape else 0)
    ]
    return rows, cols


def _block_permutations(blocks: list[list[int]], h: int):
    """All permutations of 0..h-1 preserving each block, as image tuples."""
    for images in itertools.product(
        *(itertools.permutations(block) for block in blocks)
    ):
        g = list(range(h))
        for block, image in zip(blocks, images):
            for src, dst in zip(block, image):
                g[src] = dst
        yield tuple(g)


def right_symmetrized_via_symmetrizer(
    n: int, d: int, left: Tableau, right: Tableau
) -> MPoly:
    """Same polynomial as right_symmetrized, via the Young symmetrizer.

    Both tableaux are written as specializations of the row-major filling D
    with 1..h; the symmetrizer sum over the row group of D (signed) and the
    column group of D (unsigned) is applied to the left-entry positions of
    the full-depth column pair, the right entries staying put.
    """
    if left.shape != right.shape:
        return MPoly.zero(n, d)
    shape = left.shape
    h = sum(shape)
    if h == 0:
        return MPoly.one(n, d)
    rows, cols = _row_major_blocks(shape)
    lword, rword = left.word(), right.word()
    terms = []
    for sigma in _block_permutations(rows, h):
        sign = permutation_sign(sigma)
        for tau in _block_permutations(cols, h):
            lefts = tuple(lword[sigma[tau[k]]] for k in range(h))
            terms.append(column_bitableau(n, d, lefts, rword) * sign)
    return poly_sum(n, d, terms)


# -- immanants ---------------------------------------------------------------


def immanant(
    n: int, d: int, shape: Sequence[int], lefts: Sequence[int], rights: Sequence[int]
) -> MPoly:
    """Character-weighted sum of column bitableaux over left permutations."""
    shape = check_partition(shape)
    h = sum(shape)
    lefts, rights = tuple(lefts), tuple(rights)
    if len(lefts) != h or len(rights) != h:
        raise ValueError(f"index words must have length {h}")
    terms = []
    for sigma in itertools.permutations(range(h)):
        chi = character(shape, sigma)
        if chi:
            permuted = tuple(lefts[sigma[k]] for k in range(h))
            terms.append(column_bitableau(n, d, permuted, rights) * chi)
    return poly_sum(n, d, terms)


def imm_operator(shape: Sequence[int], p: MPoly) -> MPoly:
    """Linear extension of column_bitableau -> immanant over p's monomials."""
    shape = check_partition(shape)
    h = sum(shape)
    if not p.is_homogeneous() or (p and p.total_degree() != h):
        raise ValueError(f"input must be homogeneous of degree {h}")
    sign = column_sign(h)
    terms = []
    for exp, coeff in p.terms.items():
        pairs = p.variables_of(exp)
        lefts = tuple(i for i, _ in pairs)
        rights = tuple(phi for _, phi in pairs)
        terms.append(immanant(p.n, p.d, shape, lefts, rights) * (coeff * sign))
    return poly_sum(p.n, p.d, terms)


# -- exact linear algebra -----------------------------------------------------


def rank_exact(matrix: list[list[Fraction]]) -> int:
    """Rank of a rational matrix by fraction-exact Gaussian elimination."""
    if not matrix:
        return 0
    work = [row[:] for row in matrix]
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = Fraction(1) / work[rank][col]
        work[rank] = [v * inv for v in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def solve_exact(
    matrix: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction] | None:
    """Solve A x = b exactly; A is m x k with full column rank.

    Returns None when the system is inconsistent; raises ArithmeticError when
    the columns are dependent (callers treat that as an internal basis bug).
    """
    m = len(matrix)
    k = len(matrix[0]) if m else 0
    work = [matrix[r][:] + [rhs[r]] for r in range(m)]
    row = 0
    pivots = []
    for col in range(k):
        pivot = next((r for r in range(row, m) if work[r][col]), None)
        if pivot is None:
            raise ArithmeticError("column-deficient system: basis enumeration bug")
        work[row], work[pivot] = work[pivot], work[row]
        inv = Fraction(1) / work[row][col]
        work[row] = [v * inv for v in work[row]]
        for r in range(m):
            if r != row and work[r][col]:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
    for r in range(row, m):
        if work[r][k]:
            return None
    solution = [Fraction(0)] * k
    for r, col in enumerate(pivots):
        solution[col] = work[r][k]
    return solution


# -- the standard basis and straightening ------------------------------------


def straight_key(left: Tableau, right: Tableau):
    """Sort key realizing the straightening order on same-weight pairs.

    Pairs compare first by shape (lexicographically), then by the
    concatenated row words compared reverse-lexicographically: a pair is
    larger when its word is lexicographically smaller.
    """
    word = left.word() + right.word()
    return (left.shape, tuple(-x for x in word))


def standard_pairs(h: int, n: int, d: int) -> list[tuple[Tableau, Tableau]]:
    """All standard bitableau pairs of weight h, left over 1..n, right over
    1..d, listed in increasing straightening order."""
    pairs = []
    for shape in partitions_of(h):
        if shape and shape[0] > min(n, d):
            continue
        lefts = enumerate_standard(shape, n)
        rights = lefts if d == n else enumerate_standard(shape, d)
        pairs.extend(itertools.product(lefts, rights))
    pairs.sort(key=lambda st: straight_key(*st))
    return pairs


@dataclass(frozen=True)
class StdExpansion:
    """A finite rational combination of standard bitableau pairs."""

    n: int
    d: int
    terms: tuple[tuple[Tableau, Tableau, Fraction], ...]

    def __post_init__(self):
        ordered = tuple(
            sorted(
                ((s, t, Fraction(c)) for s, t, c in self.terms if c),
                key=lambda stc: straight_key(stc[0], stc[1]),
            )
        )
        object.__setattr__(self, "terms", ordered)

    def coefficient(self, left: Tableau, right: Tableau) -> Fraction:
        for s, t, c in self.terms:
            if s == left and t == right:
                return c
        return Fraction(0)

    def shapes(self) -> set[tuple[int, ...]]:
        return {s.shape for s, _, _ in self.terms}

    def to_polynomial(self) -> MPoly:
        return poly_sum(
            self.n,
            self.d,
            (bitableau(self.n, self.d, s, t) * c for s, t, c in self.terms),
        )

    def to_json(self) -> list[dict]:
        return [
            {"left": s.to_json(), "right": t.to_json(), "coeff": str(c)}
            for s, t, c in self.terms
        ]

    @classmethod
    def from_json(cls, data: list[dict], n: int, d: int) -> "StdExpansion":
        terms = tuple(
            (
                Tableau.from_json(entry["left"]),
                Tableau.from_json(entry["right"]),
                Fraction(entry["coeff"]),
            )
            for entry in data
        )
        return cls(n, d, terms)

    def text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for s, t, c in self.terms:
            body = f"({s.compact()}|{t.compact()})"
            mag = abs(c)
            chunk = body if mag == 1 else f"{mag} · {body}"
            if not pieces:
                pieces.append(chunk if c > 0 else "−" + chunk)
            else:
                pieces.append((" + " if c > 0 else " − ") + chunk)
        return "".join(pieces)


def _solve_against_family(
    p: MPoly, family: list[tuple[tuple[Tableau, Tableau], MPoly]]
) -> dict[tuple[Tableau, Tableau], Fraction]:
    """Expand p over a family of bihomogeneous polynomials indexed by tableau
    pairs, solving one exact system per (row content, column content) block."""
    blocks: dict[tuple, dict] = {}
    for (s, t), poly in family:
        if not poly:
            continue
        exp0 = next(iter(poly.terms))
        key = (poly.row_degrees(exp0), poly.col_degrees(exp0))
        blocks.setdefault(key, {})[(s, t)] = poly
    targets: dict[tuple, dict[ExpVec, Fraction]] = {}
    for exp, coeff in p.terms.items():
        key = (p.row_degrees(exp), p.col_degrees(exp))
        targets.setdefault(key, {})[exp] = coeff
    result: dict[tuple[Tableau, Tableau], Fraction] = {}
    for key, target in targets.items():
        block = blocks.get(key)
        if not block:
            raise ArithmeticError(
                f"no basis vectors with content {key}: basis enumeration bug"
            )
        pairs = sorted(block, key=lambda st: straight_key(*st))
        monomials = sorted(
            set(target) | {exp for st in pairs for exp in block[st].terms}
        )
        matrix = [
            [block[st].terms.get(exp, Fraction(0)) for st in pairs]
            for exp in monomials
        ]
        rhs = [target.get(exp, Fraction(0)) for exp in monomials]
        solution = solve_exact(matrix, rhs)
        if solution is None:
            raise ArithmeticError(
                f"inconsistent system for content {key}: basis enumeration bug"
            )
        for st, coeff in zip(pairs, solution):
            if coeff:
                result[st] = coeff
    return result


def straighten(p: MPoly) -> StdExpansion:
    """Unique expansion of a homogeneous polynomial over standard bitableaux."""
    if not p.is_homogeneous():
        raise ValueError("straighten requires a homogeneous polynomial")
    if not p:
        return StdExpansion(p.n, p.d, ())
    h = p.total_degree()
    family = [
        ((s, t), bitableau(p.n, p.d, s, t)) for s, t in standard_pairs(h, p.n, p.d)
    ]
    coeffs = _solve_against_family(p, family)
    return StdExpansion(
        p.n, p.d, tuple((s, t, c) for (s, t), c in coeffs.items())
    )


def gc_coordinates(p: MPoly) -> dict[tuple[Tableau, Tableau], Fraction]:
    """Coordinates of a homogeneous polynomial in the basis of standard right
    symmetrized bitableaux (the Gordan-Capelli basis)."""
    if not p.is_homogeneous():
        raise ValueError("gc_coordinates requires a homogeneous polynomial")
    if not p:
        return {}
    h = p.total_degree()
    family = [
        ((s, t), right_symmetrized(p.n, p.d, s, t))
        for s, t in standard_pairs(h, p.n, p.d)
    ]
    return _solve_against_family(p, family)


# -- polarization: the differential-operator model of U(gl(n)) ---------------


def act_generator(i: int, j: int, p: MPoly) -> MPoly:
    """Polarization e_ij: sum_phi (i|phi) d/d(j|phi)."""
    if not (1 <= i <= p.n and 1 <= j <= p.n):
        raise ValueError(f"generator indices ({i},{j}) out of range for n={p.n}")
    return poly_sum(
        p.n,
        p.d,
        (
            MPoly.variable(p.n, p.d, i, phi) * p.diff(j, phi)
            for phi in range(1, p.d + 1)
        ),
    )


def act_ugl(x, p: MPoly) -> MPoly:
    """Action of a PBW element: each monomial acts with its rightmost
    generator first, weighted by its coefficient."""
    if x.n != p.n:
        raise ValueError(f"ambient mismatch: n={x.n} vs n={p.n}")
    terms = []
    for mono, coeff in x.terms.items():
        q = p
        for i, j in reversed(mono):
            q = act_generator(i, j, q)
            if not q:
                break
        terms.append(q * coeff)
    return poly_sum(p.n, p.d, terms)


def act_column_capelli_diff(
    lefts: Sequence[int], rights: Sequence[int], p: MPoly
) -> MPoly:
    """Column Capelli bitableaux as one polynomial differential operator:

        (-1)^C(h,2) sum_phibar (i_1|phi_1)...(i_h|phi_h)
                              d/d(j_1|phi_1) ... d/d(j_h|phi_h)

    with all differentiations applied before the multiplications.
    """
    lefts, rights = tuple(lefts), tuple(rights)
    if len(lefts) != len(rights):
        raise ValueError("column words must have equal length")
    h = len(lefts)
    sign = column_sign(h)
    terms = []
    for phibar in itertools.product(range(1, p.d + 1), repeat=h):
        q = p
        for j, phi in zip(rights, phibar):
            q = q.diff(j, phi)
            if not q:
                break
        if not q:
            continue
        terms.append(MPoly.monomial(p.n, p.d, zip(lefts, phibar)) * q * sign)
    return poly_sum(p.n, p.d, terms)


def act_higher_capelli(shape: Sequence[int], p: MPoly) -> MPoly:
    """The differential-operator side of the quantum immanants:

        (1/dim) sum_ibar sum_sigma chi(sigma) sum_phibar
            (i_1|phi_1)...(i_h|phi_h) d/d(i_sigma(1)|phi_1)...d/d(i_sigma(h)|phi_h)

    where chi is the package-convention character of the conjugate shape and
    dim is the dimension of the irreducible of the given shape.
    """
    shape = check_partition(shape)
    h = sum(shape)
    conj = conjugate(shape)
    n, d = p.n, p.d
    terms = []
    for sigma in itertools.permutations(range(h)):
        chi = character(conj, sigma)
        if not chi:
            continue
        for ibar in itertools.product(range(1, n + 1), repeat=h):
            for phibar in itertools.product(range(1, d + 1), repeat=h):
                q = p
                for k in range(h):
                    q = q.diff(ibar[sigma[k]], phibar[k])
                    if not q:
                        break
                if not q:
                    continue
                terms.append(MPoly.monomial(n, d, zip(ibar, phibar)) * q * chi)
    return poly_sum(n, d, terms) / dim_irrep(shape)
