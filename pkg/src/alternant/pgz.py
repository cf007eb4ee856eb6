"""Peterson-Gorenstein-Zierler decoding of alternant codes.

Both decoders share the syndrome/locator stages:

  1. s = y @ H^T; an all-zero syndrome means y is already a codeword.
  2. S = the t x (t+1) Hankel matrix of s_0..s_{2t-1}; its rank l is the
     number of errors, and Gauss-Jordan reduction hands over the locator
     coefficients for free (gj_locator).
  3. L(z) = z^l + a_1 z^(l-1) + ... + a_l; its roots among the support
     entries give the error positions.

pgz finishes with the error-evaluator polynomial and Forney's formula;
pgzm instead solves the l x l linear system in the error values directly.
Either way the candidate correction is only reported once its syndrome
checks out, so a Corrected result is always a genuine codeword within
distance t of the input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from enum import Enum

from .galois import Field, FieldElement, Poly, pull
from .linalg import (
    Mat, MalformedSyndromeStructure, SingularSystem, Vec,
    gj_locator, hankel_matrix, solve_square,
)
from .codes import AlternantCode


class Status(Enum):
    NO_ERROR = "NoError"
    CORRECTED = "Corrected"
    FAILURE = "Failure"


class FailureReason(Enum):
    DEFECTIVE_ERROR_LOCATION = "DefectiveErrorLocation"
    VALUE_NOT_IN_BASE_FIELD = "ValueNotInBaseField"
    MALFORMED_SYNDROME_STRUCTURE = "MalformedSyndromeStructure"


@dataclass
class DecodeReport:
    """Everything a decoder run produced, successful or not.

    positions are 0-based indices into the support, ascending; values are
    the error values over the base field; corrected is the repaired word
    (None on Failure).
    """

    algorithm: str
    status: Status
    syndrome: Vec
    reason: FailureReason | None = None
    message: str = ""
    l: int = 0
    positions: tuple[int, ...] = ()
    locators: tuple[FieldElement, ...] = ()
    values: tuple[FieldElement, ...] = ()
    locator_poly: Poly | None = None
    evaluator_poly: Poly | None = None
    hankel: Mat | None = None
    corrected: Vec | None = None
    extras: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAILURE

    def render(self) -> list[str]:
        """Output lines in the fixed report format."""
        if self.status is Status.FAILURE:
            return [self.message]
        tail = f" :: Vector[{self.corrected.field.name}]"
        if self.status is Status.NO_ERROR:
            return [self.message, str(self.corrected) + tail]
        pos = "[" + ", ".join(str(p) for p in self.positions) + "]"
        val = "[" + ", ".join(str(v) for v in self.values) + "]"
        head = (f"{self.algorithm}: Error positions {pos}, "
                f"error values {val}{tail}")
        return [head, str(self.corrected) + tail]


def error_evaluator(sigma: Poly, locator_reciprocal: Poly, r: int) -> Poly:
    """E(z) = reciprocal-locator times syndrome polynomial, modulo z^r."""
    return (locator_reciprocal * sigma).truncated(r)


def forney(m: int, C: AlternantCode, E: Poly, locator_reciprocal: Poly) -> FieldElement:
    """Error value at support index m from the evaluator polynomial.

    e_m = - alpha_m E(1/alpha_m) / (h_m * Lrec'(1/alpha_m)).
    """
    F = C.ext_field
    am = C.alpha.codes[m]
    x = F.invc(am)
    num = F.mulc(am, E(FieldElement(F, x)).code)
    den = F.mulc(C.h.codes[m], locator_reciprocal.derivative()(FieldElement(F, x)).code)
    return FieldElement(F, F.negc(F.mulc(num, F.invc(den))))


def forney_alt(m: int, C: AlternantCode, E_star: Poly, locator: Poly) -> FieldElement:
    """Error value via the reversed-syndrome evaluator and the plain locator.

    e_m = - E*(alpha_m) / (h_m * alpha_m^r * L'(alpha_m)).
    """
    F = C.ext_field
    am = C.alpha.codes[m]
    num = E_star(FieldElement(F, am)).code
    den = F.mulc(C.h.codes[m],
                 F.mulc(F.powc(am, C.r), locator.derivative()(FieldElement(F, am)).code))
    return FieldElement(F, F.negc(F.mulc(num, F.invc(den))))


def alt_error_evaluator(s: Vec, locator: Poly) -> Poly:
    """E*(z) = L(z) * (s_0 z^(r-1) + s_1 z^(r-2) + ... + s_{r-1}), mod z^r."""
    F = s.field
    sigma_rev = Poly(F, tuple(reversed(s.codes)))
    return (locator * sigma_rev).truncated(len(s))

def locate(L: Poly, alphas: Vec) -> tuple[tuple[int, ...], tuple[FieldElement, ...]]:
    """Positions (ascending) and values of L's roots among the support entries."""
    F = alphas.field
    positions = []
    locators = []
    for i, c in enumerate(alphas.codes):
        if L(FieldElement(F, c)).code == 0:
            positions.append(i)
            locators.append(FieldElement(F, c))
    return tuple(positions), tuple(locators)


def random_error_vector(K: Field, n: int, w: int, rng) -> Vec:
    """Uniform weight-w error vector over K; deterministic under a seed.

    rng is a random.Random instance or an int seed; the global RNG is never
    touched.  Positions are w distinct uniform indices, values uniform
    nonzero elements.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} not in 0..{n}")
    codes = [0] * n
    for i in sorted(rng.sample(range(n), w)):
        codes[i] = rng.randrange(1, K.q)
    return Vec(K, codes)


def pgz(y, C: AlternantCode) -> DecodeReport:
    """Decode y with the Hankel/Gauss-Jordan locator and Forney values."""
    return _decode(y, C, "PGZ")


def pgzm(y, C: AlternantCode) -> DecodeReport:
    """Decode y, finishing with the l x l linear system in the error values."""
    return _decode(y, C, "PGZm")


def _decode(y, C: AlternantCode, alg: str) -> DecodeReport:
    if not isinstance(y, (Vec, list, tuple)):
        raise TypeError(f"{alg}: Argument is not a vector")
    K = C.base_field
    F = C.ext_field
    try:
        y = Vec.of(K, y) if not isinstance(y, Vec) else y
    except (ValueError, TypeError) as exc:
        raise TypeError(f"{alg}: Argument is not a vector over {K.name}: {exc}") from None
    if y.field != K:
        raise TypeError(f"{alg}: Argument is a vector over {y.field.name}, not {K.name}")
    if len(y) != C.n:
        raise ValueError(f"{alg}: Vector argument has wrong length "
                         f"({len(y)}, expected {C.n})")

    s = C.syndrome(y)
    if s.is_zero:
        return DecodeReport(alg, Status.NO_ERROR, s, message=f"{alg}: Input is a code vector",
                            corrected=y)

    if C.t == 0:
        return _failure(alg, s, FailureReason.DEFECTIVE_ERROR_LOCATION,
                        f"{alg}: Defective error location")

    S = hankel_matrix(s, C.t)
    try:
        neg_rev = gj_locator(S)
    except MalformedSyndromeStructure:
        return _failure(alg, s, FailureReason.MALFORMED_SYNDROME_STRUCTURE,
                        f"{alg}: Malformed syndrome structure", S)
    l = len(neg_rev)
    # column l of the reduced Hankel matrix reads (-a_l, ..., -a_1); negating
    # gives the locator's ascending coefficients below the leading 1.
    L = Poly(F, tuple(F.negc(c) for c in neg_rev.codes) + (1,))
    positions, locators = locate(L, C.alpha)
    if len(positions) < l:
        return _failure(alg, s, FailureReason.DEFECTIVE_ERROR_LOCATION,
                        f"{alg}: Defective error location", S,
                        l=l, locator_poly=L, positions=positions, locators=locators)

    if alg == "PGZ":
        sigma = Poly(F, s.codes)
        L_rec = L.reciprocal()
        E = error_evaluator(sigma, L_rec, C.r)
        ext_values = [forney(m, C, E, L_rec) for m in positions]
    else:
        A = Mat(F, ((F.mulc(C.h.codes[m], F.powc(eta.code, i)) for m, eta in
                     zip(positions, locators)) for i in range(l)))
        try:
            sol = solve_square(A, s[:l])
        except SingularSystem:
            return _failure(alg, s, FailureReason.MALFORMED_SYNDROME_STRUCTURE,
                            f"{alg}: Malformed syndrome structure", S,
                            l=l, locator_poly=L, positions=positions, locators=locators)
        E = None
        ext_values = list(sol)

    values = []
    for v in ext_values:
        vk = pull(v, K)
        if vk is None:
            # both decoders deliberately share this exact message text,
            # including the PGZ prefix.
            return _failure(alg, s, FailureReason.VALUE_NOT_IN_BASE_FIELD,
                            "PGZ: error value not in base field", S,
                            l=l, locator_poly=L, positions=positions, locators=locators)
        values.append(vk)
    if any(v.is_zero for v in values):
        return _failure(alg, s, FailureReason.MALFORMED_SYNDROME_STRUCTURE,
                        f"{alg}: Malformed syndrome structure", S,
                        l=l, locator_poly=L, positions=positions, locators=locators)

    corrected_codes = list(y.codes)
    for m, v in zip(positions, values):
        corrected_codes[m] = K.subc(corrected_codes[m], v.code)
    corrected = Vec(K, corrected_codes)
    if not C.syndrome(corrected).is_zero:
        return _failure(alg, s, FailureReason.MALFORMED_SYNDROME_STRUCTURE,
                        f"{alg}: Malformed syndrome structure", S,
                        l=l, locator_poly=L, positions=positions, locators=locators)

    return DecodeReport(alg, Status.CORRECTED, s, l=l,
                        positions=positions, locators=locators,
                        values=tuple(values), locator_poly=L,
                        evaluator_poly=E, hankel=S, corrected=corrected)


def _failure(alg, s, reason, message, S=None, l=0, locator_poly=None,
             positions=(), locators=()) -> DecodeReport:
    return DecodeReport(alg, Status.FAILURE, s, reason=reason, message=message,
                        hankel=S, l=l, locator_poly=locator_poly,
                        positions=tuple(positions), locators=tuple(locators))
