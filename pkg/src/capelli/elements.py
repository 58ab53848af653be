"""Distinguished elements of U(gl(n)) built from column Capelli bitableaux.

The workhorse is ``column_capelli``, a closed two-term recursion producing
the PBW normal form of the depth-h column element [i_1...i_h | j_1...j_h].
Everything else is a finite rational combination of these columns: Capelli
bitableaux, (double) Young-Capelli bitableaux, Capelli immanants, quantum
immanants and Schur elements, and the classical Capelli determinant.  The
module also realizes both directions of the correspondence between
C[M_{n,n}] and U(gl(n)) and the expansion of an element over the standard
Young-Capelli basis.
"""

from __future__ import annotations

import itertools
import threading
from fractions import Fraction
from math import factorial

from .characters import character
from .enveloping import UglElement, element_sum
from .polynomials import (
    MPoly,
    StdExpansion,
    column_sign,
    expand_into_columns,
    poly_sum,
    right_symmetrized,
    solve_exact,
    standard_pairs,
)
from .tableaux import (
    Tableau,
    check_partition,
    column_permuted_family,
    compositions,
    conjugate,
    enumerate_row_strict,
    hook_number,
    permutation_sign,
)

_column_memo: dict[tuple, UglElement] = {}
_column_memo_lock = threading.Lock()


def _check_column(lefts, rights, n) -> tuple[tuple[int, ...], tuple[int, ...]]:
    lefts = tuple(map(int, lefts))
    rights = tuple(map(int, rights))
    if len(lefts) != len(rights):
        raise ValueError("column words must have equal length")
    if any(not 1 <= k <= n for k in lefts + rights):
        raise ValueError(f"column entries out of range 1..{n}")
    return lefts, rights


def column_capelli(lefts, rights, n: int) -> UglElement:
    """PBW normal form of the column element [i_1...i_h | j_1...j_h].

    Top-row recursion: with h rows,

        [ibar|jbar] = (-1)^(h-1) e_{i1,j1} [i2...ih | j2...jh]
                    + (-1)^(h-2) sum_{k>=2} delta_{ik,j1}
                      [i1 i2 ... (omit row k) | jk j2 ... (omit row k)]

    i.e. each contraction deletes row k and substitutes j_1 <- j_k in the
    first row.  The element only depends on the rows as a multiset, so the
    memo table is keyed by the row-sorted form.
    """
    lefts, rights = _check_column(lefts, rights, n)
    return _column_sorted(tuple(sorted(zip(lefts, rights))), n)


def _column_sorted(pairs: tuple[tuple[int, int], ...], n: int) -> UglElement:
    key = (pairs, n)
    cached = _column_memo.get(key)
    if cached is not None:
        return cached
    h = len(pairs)
    if h == 0:
        result = UglElement.one(n)
    elif h == 1:
        result = UglElement.generator(n, *pairs[0])
    else:
        (i1, j1), rest = pairs[0], pairs[1:]
        top_sign = -1 if (h - 1) % 2 else 1
        result = (
            UglElement.generator(n, i1, j1) * _column_sorted(rest, n) * top_sign
        )
        contract_sign = -1 if (h - 2) % 2 else 1
        for k, (ik, jk) in enumerate(rest):
            if ik == j1:
                reduced = ((i1, jk),) + rest[:k] + rest[k + 1 :]
                result = result + _column_sorted(
                    tuple(sorted(reduced)), n
                ) * contract_sign
    with _column_memo_lock:
        _column_memo.setdefault(key, result)
    return result


_column_alt_memo: dict[tuple, UglElement] = {}
_column_alt_memo_lock = threading.Lock()


def column_capelli_alt(lefts, rights, n: int) -> UglElement:
    """Independent bottom-row recursion for the same element:

        [ibar|jbar] = (-1)^(h-1) [i1...i_{h-1} | j1...j_{h-1}] e_{ih,jh}
                    + (-1)^(h-2) sum_{k<h} delta_{ih,jk}
                      [rows l not in {k,h}, then row (ik, jh)]

    Memoized on the literal word pair so the route stays independent of
    column_capelli's row-sorting.
    """
    lefts, rights = _check_column(lefts, rights, n)
    key = (lefts, rights, n)
    cached = _column_alt_memo.get(key)
    if cached is not None:
        return cached
    h = len(lefts)
    if h == 0:
        result = UglElement.one(n)
    elif h == 1:
        result = UglElement.generator(n, lefts[0], rights[0])
    else:
        top_sign = -1 if (h - 1) % 2 else 1
        result = (
            column_capelli_alt(lefts[:-1], rights[:-1], n)
            * UglElement.generator(n, lefts[-1], rights[-1])
            * top_sign
        )
        contract_sign = -1 if (h - 2) % 2 else 1
        for k in range(h - 1):
            if lefts[-1] == rights[k]:
                kept = [l for l in range(h - 1) if l != k]
                new_lefts = tuple(lefts[l] for l in kept) + (lefts[k],)
                new_rights = tuple(rights[l] for l in kept) + (rights[-1],)
                result = result + column_capelli_alt(
                    new_lefts, new_rights, n
                ) * contract_sign
    with _column_alt_memo_lock:
        _column_alt_memo.setdefault(key, result)
    return result


def column_capelli_literal(lefts, rights, n: int) -> UglElement:
    """Top-row recursion applied to the words exactly as given.

    No row sorting and no memoization; exponential but tiny at desk scale.
    Used to confirm that every derivation order of the recursion yields the
    same element, which is what licenses the row-sorted memo above.
    """
    lefts, rights = _check_column(lefts, rights, n)
    h = len(lefts)
    if h == 0:
        return UglElement.one(n)
    if h == 1:
        return UglElement.generator(n, lefts[0], rights[0])
    top_sign = -1 if (h - 1) % 2 else 1
    result = (
        UglElement.generator(n, lefts[0], rights[0])
        * column_capelli_literal(lefts[1:], rights[1:], n)
        * top_sign
    )
    contract_sign = -1 if (h - 2) % 2 else 1
    for k in range(1, h):
        if lefts[k] == rights[0]:
            new_lefts = (lefts[0],) + lefts[1:k] + lefts[k + 1 :]
            new_rights = (rights[k],) + rights[1:k] + rights[k + 1 :]
            result = result + column_capelli_literal(
                new_lefts, new_rights, n
            ) * contract_sign
    return result


def capelli_bitableau(left: Tableau, right: Tableau, n: int) -> UglElement:
    """Image [S|T] of the bitableau (S|T): the signed sum of column Capelli
    elements over the multipermutation expansion.  Zero when shapes differ."""
    if left.shape != right.shape:
        return UglElement.zero(n)
    return element_sum(
        n,
        (
            column_capelli(lefts, rights, n) * sign
            for sign, (lefts, rights) in expand_into_columns(left, right)
        ),
    )


def young_capelli(left: Tableau, right: Tableau, n: int) -> UglElement:
    """Right symmetrized element [S|box T]: sum of [S|Tbar] over all column
    permutations Tbar of T, with multiplicity."""
    return element_sum(
        n,
        (
            capelli_bitableau(left, rbar, n)
            for rbar in column_permuted_family(right)
        ),
    )


def _row_permutation_variants(t: Tableau):
    """(sign, variant) for every tuple of within-row permutations of t."""
    per_row = [itertools.permutations(range(k)) for k in t.shape]
    for perms in itertools.product(*per_row):
        sign = 1
        for perm in perms:
            sign *= permutation_sign(perm)
        rows = tuple(
            tuple(row[perm[c]] for c in range(len(row)))
            for row, perm in zip(t.rows, perms)
        )
        yield sign, Tableau(rows)


def double_young_capelli(left: Tableau, right: Tableau, n: int) -> UglElement:
    """Two-sided symmetrized element [box S|T]:

        (-1)^C(h,2) sum_sigma (-1)^|sigma| [S|box T^sigma]

    summed over all tuples sigma of within-row permutations of T (a signed
    multiset: repeated row entries contribute repeated variants)."""
    if left.shape != right.shape:
        return UglElement.zero(n)
    h = left.weight
    return element_sum(
        n,
        (
            young_capelli(left, variant, n) * sign
            for sign, variant in _row_permutation_variants(right)
        ),
    ) * column_sign(h)


def capelli_immanant(shape, lefts, rights, n: int) -> UglElement:
    """Character-weighted sum of column Capelli elements:

        Cimm_shape[ibar; jbar] = sum_sigma chi_shape(sigma) [ibar o sigma | jbar]
    """
    shape = check_partition(shape)
    h = sum(shape)
    lefts, rights = _check_column(lefts, rights, n)
    if len(lefts) != h:
        raise ValueError(f"index words must have length {h}")
    terms = []
    for sigma in itertools.permutations(range(h)):
        chi = character(shape, sigma)
        if chi:
            permuted = tuple(lefts[sigma[k]] for k in range(h))
            terms.append(column_capelli(permuted, rights, n) * chi)
    return element_sum(n, terms)


def _diagonal_word(comp: tuple[int, ...]) -> tuple[int, ...]:
    """The weakly increasing word 1^{h_1} 2^{h_2} ... n^{h_n}."""
    return tuple(
        i for i, count in enumerate(comp, start=1) for _ in range(count)
    )


def quantum_immanant(shape, n: int) -> UglElement:
    """The central element attached to the shape:

        (-1)^C(h,2) sum_{h_1+...+h_n=h} (H(shape)/prod h_p!)
                    Cimm_{conjugate(shape)}[diag; diag]

    with diag the weakly increasing diagonal word of each composition."""
    shape = check_partition(shape)
    h = sum(shape)
    conj = conjugate(shape)
    hooks = hook_number(shape)
    terms = []
    for comp in compositions(h, n):
        word = _diagonal_word(comp)
        weight = Fraction(hooks)
        for count in comp:
            weight /= factorial(count)
        terms.append(capelli_immanant(conj, word, word, n) * weight)
    return element_sum(n, terms) * column_sign(h)


def schur_element(shape, n: int) -> UglElement:
    """Same combination as quantum_immanant scaled by 1/H(shape):

        (-1)^C(h,2) sum_{h_1+...+h_n=h} (1/prod h_p!)
                    Cimm_{conjugate(shape)}[diag; diag]
    """
    shape = check_partition(shape)
    return quantum_immanant(shape, n) / hook_number(shape)


def schur_element_dyc(shape, n: int) -> UglElement:
    """Character-free presentation of the same element:

        (1/H(shape)) sum_S [box S|S]

    summed over all row-strictly-increasing tableaux S of the conjugate
    shape with entries in 1..n."""
    shape = check_partition(shape)
    conj = conjugate(shape)
    return element_sum(
        n,
        (
            double_young_capelli(s, s, n)
            for s in enumerate_row_strict(conj, n)
        ),
    ) / hook_number(shape)


def capelli_determinant(n: int) -> UglElement:
    """Column determinant of the matrix [e_ij + delta_ij (n-i)]:

        cdet(A) = sum_sigma (-1)^|sigma| a_{sigma(1),1} a_{sigma(2),2} ...

    with the column-1 factor leftmost, normalized to PBW form."""
    if n < 1:
        raise ValueError("n must be positive")
    entries = [
        [
            UglElement.generator(n, i, j)
            + (UglElement.scalar(n, n - i) if i == j else UglElement.zero(n))
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    terms = []
    for sigma in itertools.permutations(range(n)):
        product = UglElement.one(n)
        for col in range(n):
            product = product * entries[sigma[col]][col]
        terms.append(product * permutation_sign(sigma))
    return element_sum(n, terms)


# -- the correspondence between C[M_{n,n}] and U(gl(n)) ----------------------


def koszul_inverse(p: MPoly) -> UglElement:
    """Linear map sending each degree-h monomial (i_1|j_1)...(i_h|j_h) to
    (-1)^C(h,2) [i_1...i_h | j_1...j_h]; sends (S|T) to [S|T]."""
    if p.n != p.d:
        raise ValueError("the correspondence needs square ambient n = d")
    n = p.n
    terms = []
    for exp, coeff in p.terms.items():
        pairs = p.variables_of(exp)
        lefts = tuple(i for i, _ in pairs)
        rights = tuple(j for _, j in pairs)
        terms.append(
            column_capelli(lefts, rights, n) * (coeff * column_sign(len(pairs)))
        )
    return element_sum(n, terms)


def young_capelli_basis(h: int, n: int) -> list[tuple[Tableau, Tableau]]:
    """Standard pairs indexing the Young-Capelli basis of filtration weight
    exactly h, in increasing straightening order."""
    return standard_pairs(h, n, n)


def standard_capelli_expansion(x: UglElement) -> StdExpansion:
    """Unique expansion of x over standard Young-Capelli elements [S|box T]
    of weight at most the filtration degree of x.

    Solved degree by degree from the top: the weight-k basis elements have
    PBW top terms of length k, so matching the degree-k part of the residual
    determines their coefficients; the lower-degree tail is subtracted and
    the process repeats.
    """
    n = x.n
    terms: list[tuple[Tableau, Tableau, Fraction]] = []
    residual = x
    degree = residual.filtration_degree()
    while degree is not None and degree >= 0:
        pairs = young_capelli_basis(degree, n)
        elems = [young_capelli(s, t, n) for s, t in pairs]
        top_monomials = sorted(
            {
                mono
                for elem in elems
                for mono in elem.terms
                if len(mono) == degree
            }
            | {mono for mono in residual.terms if len(mono) == degree}
        )
        matrix = [
            [elem.terms.get(mono, Fraction(0)) for elem in elems]
            for mono in top_monomials
        ]
        rhs = [residual.terms.get(mono, Fraction(0)) for mono in top_monomials]
        solution = solve_exact(matrix, rhs)
        if solution is None:
            raise ArithmeticError(
                f"degree-{degree} top terms not in the basis span: basis bug"
            )
        for (s, t), elem, coeff in zip(pairs, elems, solution):
            if coeff:
                terms.append((s, t, coeff))
                residual = residual - elem * coeff
        new_degree = residual.filtration_degree()
        if new_degree is not None and new_degree >= degree:
            raise ArithmeticError(
                f"residual degree did not drop below {degree}: basis bug"
            )
        degree = new_degree
    return StdExpansion(n, n, tuple(terms))


def koszul_map(x: UglElement) -> MPoly:
    """Forward correspondence K: expand x over standard Young-Capelli
    elements and replace each [S|box T] by the polynomial (S|box T)."""
    expansion = standard_capelli_expansion(x)
    n = x.n
    return poly_sum(
        n, n, (right_symmetrized(n, n, s, t) * c for s, t, c in expansion.terms)
    )
