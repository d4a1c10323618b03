"""j-invariants and ring class polynomials at certified precision.

The j-value of a CM point is computed from the Eisenstein q-expansions; the
class polynomial collects the j-values of all classes of a discriminant into
a monic integer polynomial, with integrality certified by recomputation at a
doubled working precision.
"""

from mpmath import mp

from singk3 import (
    Form,
    class_group,
    class_polynomial,
    j_of_form,
    recognize_rational,
    ring_class_degree,
)

# Rational CM points first.  Both normalizations travel together:
# j_raw(i) = 1728 and j_normalized(i) = 1.
for f, label in ((Form(1, 0, 1), "i"), (Form(1, 0, 4), "2i"), (Form(1, 1, 1), "zeta_3")):
    jv = j_of_form(f, 200)
    print(f"j({label}): raw = {mp.nstr(jv.j_raw, 12)}, normalized = {mp.nstr(jv.j_normalized, 12)}")
print()

# Exact recognition: j_normalized(2i) is the rational 1331/8 = (11/2)^3.
jv = j_of_form(Form(1, 0, 4), 400)
print("recognized j_n(2i) =", recognize_rational(jv.j_normalized, 2**64, 400))
print()

# Class polynomials.  Degree = class number = degree of the ring class field.
for d in (-4, -16, -23, -64, -71):
    poly = class_polynomial(d)
    print(f"d = {d}: degree {poly.degree} (= [H(O):K] = {ring_class_degree(d)}), "
          f"certified = {poly.certified}")
    print("   coefficients (constant first):", list(poly.coefficients))
print()

# The roots really are the j-values of the classes: evaluate and look at the
# residues, which sit far below the coefficient scale.
d = -23
poly = class_polynomial(d)
scale = max(abs(c) for c in poly.coefficients)
with mp.workprec(400):
    for f in class_group(d).elements:
        r = poly.evaluate(j_of_form(f, 400).j_raw)
        print(f"  |H({d}) at j of ({f})| / scale = {mp.nstr(abs(r) / scale, 5)}")
