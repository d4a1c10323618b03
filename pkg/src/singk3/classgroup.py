"""Class groups Cl(d), genus theory, and one-class-per-genus scans.

Cl(d) is enumerated as the set of reduced primitive forms of discriminant d
via the bound |b| <= a <= sqrt(|d|/3).  The abelian group structure is found
by direct composition (groups here are tiny), the genus partition as cosets
of the subgroup of squares, with classical assigned characters kept as an
independent cross-check.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod
from typing import Iterable, Iterator

from ._factor import factorize, squarefree_decomposition
from .errors import ImprimitiveInput, NotReduced
from .forms import Form, check_discriminant, compose, form_sort_key, power, principal_form


def iter_reduced_primitive_forms(d: int) -> Iterator[Form]:
    """Yield every reduced primitive form of discriminant d (loop order: a, then b)."""
    check_discriminant(d)
    amax = isqrt(-d // 3)
    parity = d & 1
    for a in range(1, amax + 1):
        four_a = 4 * a
        b = -a + 1
        if (b & 1) != parity:
            b += 1
        while b <= a:
            num = b * b - d
            if num % four_a == 0:
                c = num // four_a
                if c >= a and (a != c or b >= 0) and gcd(gcd(a, b), c) == 1:
                    yield Form(a, b, c)
            b += 2


def reduced_primitive_forms(d: int) -> tuple[Form, ...]:
    return tuple(sorted(iter_reduced_primitive_forms(d), key=form_sort_key))


@dataclass(frozen=True)
class ClassGroup:
    """Cl(d): reduced primitive forms of discriminant d with their group structure.

    generators lists (form, order) pairs presenting the group as an internal
    direct product of cyclic subgroups; orders are non-increasing and each
    divides the previous one (invariant factors).
    """

    discriminant: int
    elements: tuple[Form, ...]
    generators: tuple[tuple[Form, int], ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Form:
        return principal_form(self.discriminant)

    @property
    def is_cyclic(self) -> bool:
        return len(self.generators) <= 1

    def cyclic_orders(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.generators)


def _decompose(elements: tuple[Form, ...], identity: Form) -> tuple[tuple[Form, int], ...]:
    # Greedy basis construction: repeatedly adjoin an element of maximal order
    # in the quotient by the span so far, adjusted to have that exact order.
    # The maximality guarantees the adjustment exponents divide out (the
    # constructive proof of the abelian basis theorem).
    h = len(elements)
    gens: list[tuple[Form, int]] = []
    span: dict[Form, tuple[int, ...]] = {identity: ()}
    while len(span) < h:
        best, best_k = None, 0
        for x in elements:
            if x in span:
                continue
            k, p = 1, x
            while p not in span:
                p = compose(p, x)
                k += 1
            if k > best_k:
                best, best_k = x, k
        assert best is not None
        x, k = best, best_k
        p = x
        for _ in range(k - 1):
            p = compose(p, x)
        exps = span[p]  # x^k in terms of current generators
        for (g, _), e in zip(gens, exps):
            assert e % k == 0, "maximal-order pick violated divisibility"
            x = compose(x, power(g, -(e // k)))
        new_span: dict[Form, tuple[int, ...]] = {}
        for elem, vec in span.items():
            p = elem
            for t in range(k):
                new_span[p] = vec + (t,)
                if t + 1 < k:
                    p = compose(p, x)
        assert len(new_span) == len(span) * k
        span = new_span
        gens.append((x, k))
    assert prod(k for _, k in gens) == h
    for (_, k1), (_, k2) in zip(gens, gens[1:]):
        assert k1 % k2 == 0
    return tuple(gens)


@lru_cache(maxsize=None)
def class_group(d: int) -> ClassGroup:
    """Enumerate Cl(d) and determine its decomposition into cyclic factors."""
    elements = reduced_primitive_forms(d)
    generators = _decompose(elements, principal_form(d))
    return ClassGroup(d, elements, generators)


def class_number(d: int) -> int:
    return class_group(d).order


@lru_cache(maxsize=None)
def squares_subgroup(group: ClassGroup) -> frozenset[Form]:
    """The subgroup Cl^2(d) = {F*F : F in Cl(d)} (the principal genus)."""
    return frozenset(compose(f, f) for f in group.elements)


@dataclass(frozen=True)
class GenusPartition:
    """Partition of Cl(d) into genera = cosets of the subgroup of squares."""

    cosets: tuple[frozenset[Form], ...]
    principal_genus: frozenset[Form]

    @property
    def genus_count(self) -> int:
        return len(self.cosets)

    def coset_of(self, f: Form) -> frozenset[Form]:
        for coset in self.cosets:
            if f in coset:
                return coset
        raise KeyError(f"{f} not in this class group")


@lru_cache(maxsize=None)
def genus_partition(group: ClassGroup) -> GenusPartition:
    squares = squares_subgroup(group)
    cosets = []
    assigned: set[Form] = set()
    for f in group.elements:  # elements are sorted, so cosets come out ordered
        if f in assigned:
            continue
        coset = frozenset(compose(f, s) for s in squares)
        assigned |= coset
        cosets.append(coset)
    g = len(cosets)
    assert g & (g - 1) == 0, "number of genera must be a power of 2"
    return GenusPartition(tuple(cosets), squares)


def classes_per_genus(d: int) -> int:
    """n = h/g =  #Cl^2(d)."""
    return len(squares_subgroup(class_group(d)))


def is_two_torsion(f: Form) -> bool:
    """Reduced-form 2-torsion test: the class is its own inverse iff one of
    the reduction inequalities is an equality (b = 0, a = b, or a = c)."""
    if not f.is_reduced():
        raise NotReduced(f"{f} is not reduced")
    return f.b == 0 or f.a == f.b or f.a == f.c


def is_one_class_per_genus(d: int) -> bool:
    """True iff every class of Cl(d) is 2-torsion, i.e. n = h/g = 1."""
    return classes_per_genus(d) == 1


def _all_classes_boundary(d: int) -> bool:
    # Fast scan path: every reduced primitive form sits on the reduction
    # boundary.  Equivalent to is_one_class_per_genus(d); cross-checked by
    # tests against the subgroup-of-squares route.
    return all(f.b == 0 or f.a == f.b or f.a == f.c for f in iter_reduced_primitive_forms(d))


def scan_one_class_per_genus(bound: int, workers: int = 1) -> list[int]:
    """All discriminants |d| <= bound with one class per genus, sorted by |d|.

    Deterministic output regardless of worker count; completeness beyond the
    bound is not claimed (classically at most one further discriminant, of
    very large absolute value, could exist).
    """
    if bound < 4:
        raise ValueError("bound must be >= 4")
    candidates = [-n for n in range(3, bound + 1) if n % 4 in (0, 3)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flags = list(pool.map(_all_classes_boundary, candidates, chunksize=64))
    else:
        flags = [_all_classes_boundary(d) for d in candidates]
    return [d for d, ok in zip(candidates, flags) if ok]


@dataclass(frozen=True)
class FundamentalData:
    """d = f^2 * d_K with d_K the fundamental discriminant of Q(sqrt(d))."""

    field_discriminant: int
    conductor: int


@lru_cache(maxsize=None)
def fundamental_data(d: int) -> FundamentalData:
    check_discriminant(d)
    core, s = squarefree_decomposition(-d)
    d0 = -core
    if d0 % 4 == 1:
        return FundamentalData(d0, s)
    assert s % 2 == 0, "non-fundamental 2-part must leave an even conductor"
    return FundamentalData(4 * d0, s // 2)


def distinct_fields(ds: Iterable[int]) -> frozenset[int]:
    """Set of fundamental discriminants of the fields Q(sqrt(d))."""
    return frozenset(fundamental_data(d).field_discriminant for d in ds)


def _legendre(a: int, p: int) -> int:
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def _represented_value_coprime_to(f: Form, n: int) -> int:
    for radius in range(1, 9):
        for x in range(-radius, radius + 1):
            for y in range(-radius, radius + 1):
                v = f.a * x * x + f.b * x * y + f.c * y * y
                if v and gcd(v, n) == 1:
                    return v
    raise ArithmeticError(f"no represented value coprime to {n} found for {f}")


def genus_characters(f: Form) -> tuple[int, ...]:
    """Assigned character vector of the class of f.

    Legendre symbols at the odd primes dividing d, plus the mod-4 / mod-8
    characters prescribed by -d/4 mod 8 when 4 | d, all evaluated on a
    represented value coprime to 2d.  Classes lie in the same genus iff their
    vectors agree; this cross-checks the subgroup-of-squares partition.
    """
    if not f.is_primitive():
        raise ImprimitiveInput("genus characters require a primitive form")
    d = f.discriminant()
    v = _represented_value_coprime_to(f, 2 * d)
    chars = [_legendre(v, p) for p in sorted(factorize(-d)) if p != 2]
    if d % 4 == 0:
        n = -d // 4
        delta = 1 if v % 4 == 1 else -1
        eps = 1 if v % 8 in (1, 7) else -1
        if n % 4 == 1:
            chars.append(delta)
        elif n % 4 == 3:
            pass
        elif n % 8 == 2:
            chars.append(delta * eps)
        elif n % 8 == 6:
            chars.append(eps)
        elif n % 8 == 4:
            chars.append(delta)
        else:  # n = 0 mod 8
            chars.append(delta)
            chars.append(eps)
    return tuple(chars)
