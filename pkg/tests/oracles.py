"""Independent oracles used to freeze expected values.

Nothing here calls the reduction, composition, or genus code paths it is
meant to check: equivalence is decided by searching over unimodular words,
class numbers by the classical conductor formula, symbols by exponentiation.
"""

from __future__ import annotations

import heapq
import random

from singk3.forms import Form


def apply_word(f: Form, word) -> Form:
    """Apply a sequence of 'S', 'T', 'U' (= T^-1) moves to a form."""
    for move in word:
        if move == "S":
            f = f.transformed(0, -1, 1, 0)
        elif move == "T":
            f = f.transformed(1, 1, 0, 1)
        elif move == "U":
            f = f.transformed(1, -1, 0, 1)
        else:
            raise ValueError(move)
    return f


def sl2_reduced_equivalent(f: Form, max_nodes: int = 200000) -> Form:
    """Reduced form equivalent to f, found by best-first search over S/T moves.

    Independent of Form.reduced(): only the (declarative) reducedness
    predicate is shared.
    """
    seen = set()
    heap = [(f.a + abs(f.b) + f.c, 0, (f.a, f.b, f.c))]
    counter = 0
    while heap and len(seen) < max_nodes:
        _, _, triple = heapq.heappop(heap)
        if triple in seen:
            continue
        seen.add(triple)
        g = Form(*triple)
        if g.is_reduced():
            return g
        for move in ("S", "T", "U"):
            nxt = apply_word(g, move)
            t = (nxt.a, nxt.b, nxt.c)
            if t not in seen:
                counter += 1
                heapq.heappush(heap, (nxt.a + abs(nxt.b) + nxt.c, counter, t))
    raise RuntimeError(f"no reduced equivalent found for {f}")


def random_unimodular_word(rng: random.Random, max_len: int = 8):
    return [rng.choice("STU") for _ in range(rng.randint(0, max_len))]


def random_form(rng: random.Random, max_a: int = 50, max_disc: int = 10**6) -> Form:
    while True:
        a = rng.randint(1, max_a)
        b = rng.randint(-max_a, max_a)
        cmin = (b * b + 4 * a - 1) // (4 * a) + 1  # smallest c with negative disc
        c = rng.randint(cmin, cmin + max_a)
        f = Form(a, b, c)
        if -f.discriminant() <= max_disc:
            return f


def random_primitive_form(rng: random.Random, max_a: int = 40) -> Form:
    while True:
        f = random_form(rng, max_a)
        if f.is_primitive():
            return f


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for n >= 1 (binary algorithm, no factoring)."""
    if n <= 0:
        raise ValueError("lower argument must be positive here")
    result = 1
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        while n % 2 == 0:
            n //= 2
            if a % 8 in (3, 5):
                result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def class_number_fundamental(d: int) -> int:
    """h(d) for fundamental d via the Dirichlet character sum."""
    if d in (-3, -4):
        return 1
    total = sum(kronecker(d, a) * a for a in range(1, -d))
    assert total % d == 0
    return total // d  # total = d * h < 0 twice negated


def class_number_by_conductor_formula(d_K: int, f: int, h_K: int) -> int:
    """h(f^2 d_K) from h(d_K) by the classical conductor formula."""
    from singk3._factor import factorize

    h = h_K * f
    for p in factorize(f):
        h = h * (p - kronecker(d_K, p)) // p
    if f > 1:
        if d_K == -3:
            assert h % 3 == 0
            h //= 3
        elif d_K == -4:
            assert h % 2 == 0
            h //= 2
    return h


def class_number_oracle(d: int) -> int:
    """Independent h(d) for any discriminant: character sum + conductor formula."""
    from singk3._factor import squarefree_decomposition

    core, s = squarefree_decomposition(-d)
    d_K, f = (-core, s) if (-core) % 4 == 1 else (-4 * core, s // 2)
    return class_number_by_conductor_formula(d_K, f, class_number_fundamental(d_K))


# Class numbers of small fundamental discriminants, from the standard tables.
KNOWN_CLASS_NUMBERS = {
    -3: 1, -4: 1, -7: 1, -8: 1, -11: 1, -15: 2, -19: 1, -20: 2, -23: 3,
    -24: 2, -31: 3, -35: 2, -39: 4, -40: 2, -43: 1, -47: 5, -51: 2, -52: 2,
    -55: 4, -56: 4, -59: 3, -67: 1, -71: 7, -84: 4, -88: 2, -95: 8,
    -103: 5, -120: 4, -163: 1, -187: 2, -231: 12, -311: 19, -479: 25,
    -5460: 16, -7392: 16,
}
