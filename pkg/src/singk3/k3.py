"""Singular K3 surfaces through their transcendental intersection forms.

Everything a form Q = (a, b, c) determines about the surface carrying it:
the invariant package (content, conductors, CM field), the set of Galois
conjugates of the transcendental lattice (a genus, rescaled by the content),
divisibility and parity constraints on the degree of the field of definition,
the cases where the minimal field is known exactly, and explicit Weierstrass
models for the associated elliptic fibration and its Kummer base change.

The fibration coefficients are A = j_n(tau1) * j_n(tau2) and
B = (1 - j_n(tau1)) * (1 - j_n(tau2)) in the normalization j_n(i) = 1:

    pencil:  y^2 = x^3 - 3*A*B*t^4*x + A*B*t^5*(B*t^2 - 2*B*t + 1)
    Kummer:  y^2 = x^3 - 3*A*B*t^4*x + A*B*t^4*(B*t^4 - 2*B*t^2 + 1)

When A*B = 0 these specialize via the substitute-one rule (the zero slot of
the twisting substitution is replaced by 1), which keeps the fibration
non-degenerate; whether A or B vanishes is decided exactly from the
discriminants (A = 0 iff d or d' is -3, B = 0 iff d or d' is -4).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpc

from ._factor import factorize
from .classgroup import (
    class_group,
    class_number,
    classes_per_genus,
    fundamental_data,
    genus_partition,
    is_two_torsion,
)
from .errors import InconsistentPair
from .forms import Form, check_discriminant, principal_form
from .lattices import TauPair, sm_factors
from .modular import DEFAULT_PRECISION_BITS, j_of_form, recognize_rational

Value = Fraction | mpc  # exact when recognized, arbitrary-precision complex otherwise


@dataclass(frozen=True)
class SurfaceClass:
    """Invariant package of the surface with intersection form Q."""

    form: Form
    discriminant: int  # d
    primitive_discriminant: int  # d' with d = m^2 d'
    content: int  # m, degree of primitivity
    conductor: int  # f  with d  = f^2  d_K
    primitive_conductor: int  # f' with d' = f'^2 d_K
    field_discriminant: int  # d_K of K = Q(sqrt(d))


def surface_class(q: Form) -> SurfaceClass:
    d = q.discriminant()
    m = q.content()
    d_prime = q.primitive_part().discriminant()
    fd = fundamental_data(d)
    fd_prime = fundamental_data(d_prime)
    assert fd.field_discriminant == fd_prime.field_discriminant
    f, f_prime = fd.conductor, fd_prime.conductor
    assert f * f_prime == m * f_prime * f_prime
    return SurfaceClass(q, d, d_prime, m, f, f_prime, fd.field_discriminant)


@dataclass(frozen=True)
class ModelField:
    """The field Q(j(tau1), j(tau2)) over which an explicit model exists."""

    description: str
    contained_in: str
    j_tau1_normalized: mpc
    j_tau2_normalized: mpc
    precision_bits: int


@dataclass(frozen=True)
class BoundsReport:
    """Constraints on the degree of the field of definition.

    classes_per_genus divides the degree over the CM field; that degree in
    turn divides class_number_upper (the explicit model lives inside the ring
    class field).  parity_forced means the degree over Q is even.  The exact
    minimal field is reported only in the tabulated cases.
    """

    surface: SurfaceClass
    classes_per_genus: int
    class_number_upper: int
    parity_forced: bool
    exact_minimal_field: str | None
    genus_size: int
    model_field: ModelField


def genus_of_transcendental_lattice(q: Form) -> frozenset[Form]:
    """Intersection forms in the genus of q: content-rescaled coset of the
    principal genus through the primitive part.  This is exactly the set of
    Galois-conjugate transcendental lattices."""
    qp = q.primitive_part().reduced()
    m = q.content()
    part = genus_partition(class_group(qp.discriminant()))
    return frozenset(f.scaled(m) for f in part.coset_of(qp))


def _odd_prime_power(n: int, modulus: int, residue: int) -> bool:
    # n = p^r, p an odd prime with p = residue (mod modulus), r odd
    if n < 3 or n % 2 == 0:
        return False
    items = list(factorize(n).items())
    if len(items) != 1:
        return False
    p, r = items[0]
    return r % 2 == 1 and p % modulus == residue


def _minimal_field_table(d: int, m: int) -> bool:
    if m == 1:
        if d in (-4, -8, -16):
            return True
        if _odd_prime_power(-d, 4, 3):
            return True
        return d % 4 == 0 and _odd_prime_power(-d // 4, 4, 3)
    if m == 2:
        if d in (-12, -16):
            return True
        return d % 4 == 0 and _odd_prime_power(-d // 4, 8, 7)
    if m == 3:
        return d == -27
    return False


def lem_bounds_applies(d: int, m: int) -> bool:
    """Whether (d, m) is a case with exactly known minimal field of definition.

    True when (d, m) itself, or (d/4, m/2) via the Kummer route, lies in the
    table whose rows are the discriminants with one class per genus and
    conductor-stable class number.
    """
    check_discriminant(d)
    if m < 1 or d % (m * m) != 0:
        raise InconsistentPair(f"m={m} is not a degree of primitivity for d={d}")
    d_prime = d // (m * m)
    if d_prime % 4 not in (0, 1):
        raise InconsistentPair(f"d/m^2 = {d_prime} is not a discriminant")
    if _minimal_field_table(d, m):
        return True
    return m % 2 == 0 and _minimal_field_table(d // 4, m // 2)


def kummer_reduction(q: Form) -> tuple[Form, TauPair] | None:
    """If q is 2-divisible, the half form and CM points (tau1, tau2/2) whose
    elliptic product has Kummer surface realizing q; None otherwise."""
    if q.content() % 2:
        return None
    half = Form(q.a // 2, q.b // 2, q.c // 2)
    pair = sm_factors(q)
    return half, TauPair(pair.tau1, pair.tau2 / 2, half.discriminant())


def analyze(q: Form, precision_bits: int = DEFAULT_PRECISION_BITS) -> BoundsReport:
    """Bounds report for the surface with intersection form q."""
    sc = surface_class(q)
    qp = q.primitive_part().reduced()
    n = classes_per_genus(sc.primitive_discriminant)
    h_upper = class_number(sc.discriminant)
    parity_forced = not is_two_torsion(qp)
    exact = None
    if lem_bounds_applies(sc.discriminant, sc.content):
        principal = qp == principal_form(sc.primitive_discriminant)
        exact = "Q(j(tau1))" if principal else "K(j(tau1))"
    j1 = j_of_form(qp, precision_bits)
    j2 = j_of_form(principal_form(sc.discriminant), precision_bits)
    model = ModelField(
        "Q(j(tau1), j(tau2))",
        "K(j(tau2))",
        j1.j_normalized,
        j2.j_normalized,
        precision_bits,
    )
    return BoundsReport(sc, n, h_upper, parity_forced, exact, n, model)


def _is_zero(v: Value) -> bool:
    return isinstance(v, Fraction) and v == 0


def _mul(u, v):
    if isinstance(u, (int, Fraction)) and isinstance(v, (int, Fraction)):
        return Fraction(u) * Fraction(v)
    return mp.mpmathify(u) * mp.mpmathify(v)


@dataclass(frozen=True, eq=False)
class WeierstrassModel:
    """y^2 = x^3 + a4(t)*x + a6(t) in the layout of the pencil equations."""

    kind: str  # "inose_pencil" or "kummer"
    A: Value
    B: Value
    degenerate_rule_applied: bool
    precision_bits: int

    def a4_polynomial(self) -> dict[int, Value]:
        A, B = self.A, self.B
        if _is_zero(A):
            return {}
        coeff = _mul(-3, A) if _is_zero(B) else _mul(-3, _mul(A, B))
        return {4: coeff}

    def a6_polynomial(self) -> dict[int, Value]:
        A, B = self.A, self.B
        top, mid, low = (7, 6, 5) if self.kind == "inose_pencil" else (8, 6, 4)
        if _is_zero(B):
            return {top: A, low: A}
        if _is_zero(A):
            bb = _mul(B, B)
            return {top: bb, mid: _mul(-2, bb), low: B}
        ab = _mul(A, B)
        abb = _mul(ab, B)
        return {top: abb, mid: _mul(-2, abb), low: ab}

    def equation(self) -> str:
        """Human-readable equation in the factored layout; exact rational
        coefficients are substituted, otherwise A and B stay symbolic."""
        inose = self.kind == "inose_pencil"
        t_out = "t^5" if inose else "t^4"
        u2, u1 = ("t^2", "t") if inose else ("t^4", "t^2")
        A, B = self.A, self.B
        exact = isinstance(A, Fraction) and isinstance(B, Fraction)
        if _is_zero(B):
            f3, fo = (_fmt(3 * A), _fmt(A)) if exact else ("3*A*", "A*")
            inner = f"({u2} + 1)"
            return f"y^2 = x^3 - {f3}t^4*x + {fo}{t_out}*{inner}"
        if _is_zero(A):
            if exact:
                fo, fb, f2b = _fmt(B), _fmt(B), _fmt(2 * B)
            else:
                fo, fb, f2b = "B*", "B*", "2*B*"
            inner = f"({fb}{u2} - {f2b}{u1} + 1)"
            return f"y^2 = x^3 + {fo}{t_out}*{inner}"
        if exact:
            f3, fo, fb, f2b = _fmt(3 * A * B), _fmt(A * B), _fmt(B), _fmt(2 * B)
        else:
            f3, fo, fb, f2b = "3*A*B*", "A*B*", "B*", "2*B*"
        inner = f"({fb}{u2} - {f2b}{u1} + 1)"
        return f"y^2 = x^3 - {f3}t^4*x + {fo}{t_out}*{inner}"


def _fmt(v: Fraction) -> str:
    # multiplicative factor rendering: elide 1, parenthesize fractions/negatives
    v = Fraction(v)
    if v == 1:
        return ""
    if v.denominator == 1 and v.numerator > 0:
        return f"{v.numerator}*"
    return f"({v})*"


def _pencil_values(q: Form, precision_bits: int):
    sc = surface_class(q)
    a_zero = sc.primitive_discriminant == -3 or sc.discriminant == -3
    b_zero = sc.primitive_discriminant == -4 or sc.discriminant == -4
    assert not (a_zero and b_zero)
    j1 = j_of_form(q.primitive_part(), precision_bits)
    j2 = j_of_form(principal_form(sc.discriminant), precision_bits)
    with mp.workprec(precision_bits):
        a_num = j1.j_normalized * j2.j_normalized
        b_num = (1 - j1.j_normalized) * (1 - j2.j_normalized)
        A = Fraction(0) if a_zero else recognize_rational(a_num, 2**64, precision_bits)
        B = Fraction(0) if b_zero else recognize_rational(b_num, 2**64, precision_bits)
        if A is None:
            A = +a_num
        if B is None:
            B = +b_num
    return A, B, a_zero or b_zero


def inose_pencil(q: Form, precision_bits: int = DEFAULT_PRECISION_BITS) -> WeierstrassModel:
    """The elliptic fibration carrying the surface with intersection form q."""
    A, B, degenerate = _pencil_values(q, precision_bits)
    return WeierstrassModel("inose_pencil", A, B, degenerate, precision_bits)


def kummer_equation(q: Form, precision_bits: int = DEFAULT_PRECISION_BITS) -> WeierstrassModel:
    """The quadratic base change t -> t^2 of the pencil: the Kummer fibration."""
    A, B, degenerate = _pencil_values(q, precision_bits)
    return WeierstrassModel("kummer", A, B, degenerate, precision_bits)
