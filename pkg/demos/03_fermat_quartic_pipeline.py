"""The Fermat quartic, from intersection form to elliptic factors.

The Fermat quartic surface x0^4 + x1^4 + x2^4 + x3^4 = 0 has transcendental
intersection form diag(8, 8), i.e. the form (4, 0, 4) in our (a, b, c)
coordinates.  Two product-abelian-surface descriptions fall out of the
arithmetic:

  * the direct factors E_i x E_{4i} (tau1 = i, tau2 = 4i), and
  * the Kummer route: (4,0,4) is 2-divisible, so the surface is the Kummer
    surface of E_i x E_{2i}, whose factors are both defined over Q.
"""

from singk3 import (
    Form,
    QuadLattice,
    homothety_equal,
    inose_pencil,
    kummer_equation,
    kummer_reduction,
    lattice_from_form,
    multiply,
    shioda_mitani_check,
    sm_factors,
)

q = Form(4, 0, 4)
print(f"form ({q}): discriminant {q.discriminant()}, content {q.content()}")

pair = sm_factors(q)
print(f"tau1 = {pair.tau1}   (the point i)")
print(f"tau2 = {pair.tau2}   (the point 4i)")
print()

# The product lattice criterion confirms E_i x E_{4i} and rules out E_i x E_{2i}.
L = {k: QuadLattice.from_tau(pair.tau1 * k) for k in (1, 2, 4)}
print("does E_i x E_{4i} realize the form?", shioda_mitani_check(L[1], L[4], q))
print("does E_i x E_{2i} realize the form?", shioda_mitani_check(L[1], L[2], q))
print("(conductors:", ", ".join(f"{k}i -> {L[k].conductor}" for k in L), "\b)")
print()

# Lattice multiplication itself: O_K times anything is that thing.
print("[Z+iZ] * [Z+4iZ] ~ [Z+iZ]:", homothety_equal(multiply(L[1], L[4]), lattice_from_form(q)))
print()

# 2-divisibility gives the Kummer description with halved tau2.
half, halved = kummer_reduction(q)
print(f"half form: ({half}), tau1 = {halved.tau1}, tau2/2 = {halved.tau2}")
print("so the surface is Km(E_i x E_{2i}); both factors have rational j.")
print()

# Explicit Weierstrass models for the half form (2, 0, 2).
pencil = inose_pencil(half)
km = kummer_equation(half)
print(f"pencil for ({half}):  {pencil.equation()}")
print(f"  A = {pencil.A}, B = {pencil.B} (degenerate rule: {pencil.degenerate_rule_applied})")
print(f"Kummer base change:  {km.equation()}")
