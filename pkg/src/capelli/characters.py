"""Irreducible characters of the symmetric group S_h.

Two conventions coexist:

* ``character_std`` is the textbook character table (trivial representation
  on the row shape (h), sign on the column shape (1^h)), computed by the
  Murnaghan-Nakayama recursion.
* ``character`` is the transposed convention used everywhere else in this
  package: the trivial representation sits on the column shape (1^h) and the
  sign representation on the row shape (h).  The two are related by
  conjugating the partition.
"""

from __future__ import annotations

from functools import cache
from math import factorial

from .tableaux import check_partition, conjugate, cycle_type, hook_number


@cache
def character_std(shape: tuple[int, ...], ct: tuple[int, ...]) -> int:
    """Standard-convention character value chi^shape on cycle type ct.

    Murnaghan-Nakayama: strip a border strip of the first cycle length from
    the shape in all possible ways; each removal flips sign by the strip
    height.  Border strips are enumerated through first-column hook lengths
    (beta numbers), where removing an r-strip subtracts r from one beta
    number while keeping all beta numbers distinct.
    """
    shape = check_partition(shape)
    ct = check_partition(ct)
    if sum(shape) != sum(ct):
        raise ValueError(f"weight mismatch: {shape} vs {ct}")
    if not ct:
        return 1
    r, rest = ct[0], ct[1:]
    k = len(shape)
    beta = [shape[i] + (k - 1 - i) for i in range(k)]
    beta_set = set(beta)
    total = 0
    for index, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_shape = tuple(
            part
            for i, nbeta in enumerate(new_beta)
            if (part := nbeta - (k - 1 - i)) > 0
        )
        total += (-1) ** height * character_std(new_shape, rest)
    return total


def character(shape, sigma) -> int:
    """Package-convention character of shape on the permutation sigma
    (an image tuple on 0..h-1).

    Equal to the standard character of the conjugate shape on sigma's cycle
    type; this puts the trivial character on column shapes (1^h) and the
    sign character on row shapes (h).
    """
    return character_std(conjugate(shape), cycle_type(tuple(sigma)))


def character_on_cycle_type(shape, ct) -> int:
    """Package-convention character evaluated directly on a cycle type."""
    return character_std(conjugate(shape), check_partition(ct))


def dim_irrep(shape) -> int:
    """h! / H(shape): dimension of the irreducible of that shape."""
    shape = check_partition(shape)
    h = sum(shape)
    hooks = hook_number(shape)
    dim, remainder = divmod(factorial(h), hooks)
    if remainder:
        raise ArithmeticError(f"hook number {hooks} does not divide {h}!")
    return dim
