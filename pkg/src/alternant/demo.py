"""Reference corpus: seven worked decoding examples with frozen outcomes.

Each case fixes a received vector for one of the shipped demo codes and the
complete expected trace: syndrome, Hankel matrix, error count, locator
polynomial, evaluator, positions, values and (for the small cases) the exact
report text.  ``run_demo`` replays every case with both decoders and returns
structured pass/fail results; the CLI ``demo`` command prints them.

Tests and the demo command share this module so a regression shows up in
both places.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from importlib import resources

from .codespec import CodeSpecError, parse_code
from .codes import AlternantCode
from .linalg import Vec, Mat, rank, expand
from .pgz import pgz, pgzm, Status

DEMO_NAMES = ("prs13", "prs31", "bch31", "grs32", "bch121", "goppa19", "goppa76")

_CODES: dict[str, AlternantCode] = {}


def demo_code(name: str) -> AlternantCode:
    """Load (and cache) one of the shipped demo codes by short name."""
    if name not in DEMO_NAMES:
        raise CodeSpecError(
            f"unknown demo code {name!r}; available: {', '.join(DEMO_NAMES)}")
    if name not in _CODES:
        text = (resources.files("alternant") / "demo_codes" / f"{name}.json"
                ).read_text(encoding="utf-8")
        _CODES[name] = parse_code(text)
    return _CODES[name]


def _sparse(n: int, entries: dict) -> tuple:
    vec = [0] * n
    for pos, val in entries.items():
        vec[pos] = val
    return tuple(vec)


@dataclass(frozen=True)
class DemoCase:
    name: str
    code: str
    y: tuple              # received word, as element tokens over the base field
    algorithm: str = "pgz"
    expect: dict = dataclass_field(default_factory=dict)


# Expected values are frozen literals; element tokens use the same textual
# syntax the fields themselves print ("a**5" for generator powers).
CASES: tuple[DemoCase, ...] = (
    DemoCase(
        name="prs13-one-error",
        code="prs13",
        y=_sparse(12, {4: 3}),
        expect={
            "triple": (12, 8, 5),
            "support": (1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7),
            "control_matrix": (
                (1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7),
                (1, 4, 3, 12, 9, 10, 1, 4, 3, 12, 9, 10),
                (1, 8, 12, 5, 1, 8, 12, 5, 1, 8, 12, 5),
                (1, 3, 9, 1, 3, 9, 1, 3, 9, 1, 3, 9),
            ),
            "syndrome": (9, 1, 3, 9),
            "hankel": ((9, 1, 3), (1, 3, 9)),
            "l": 1,
            "locator": (10, 1),        # z - 3
            "evaluator": (9,),         # constant 9
            "positions": (4,),
            "locators": (3,),
            "values": (3,),
            "report_lines": (
                "PGZ: Error positions [4], error values [3] :: Vector[Z13]",
                "[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] :: Vector[Z13]",
            ),
        },
    ),
    DemoCase(
        name="prs13-two-errors",
        code="prs13",
        y=_sparse(12, {4: 3, 9: 7}),
        expect={
            "syndrome": (5, 7, 7, 3),
            "hankel": ((5, 7, 7), (7, 7, 3)),
            "l": 2,
            "locator": (2, 5, 1),      # z^2 + 5z + 2 = (z-3)(z-5)
            "evaluator": (5, 6),       # 5 + 6z
            "positions": (4, 9),
            "locators": (3, 5),
            "values": (3, 7),
            "report_lines": (
                "PGZ: Error positions [4, 9], error values [3, 7] :: Vector[Z13]",
                "[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] :: Vector[Z13]",
            ),
        },
    ),
    DemoCase(
        name="prs31-five-errors",
        code="prs31",
        y=_sparse(30, {9: 14, 13: 28, 14: 26, 19: 23, 22: 16}),
        expect={
            "triple": (30, 20, 11),
            "l": 5,
            "positions": (9, 13, 14, 19, 22),
            "values": (14, 28, 26, 23, 16),
        },
    ),
    DemoCase(
        name="bch31-three-errors",
        code="bch31",
        y=_sparse(31, {5: 1, 19: 1, 28: 1}),
        expect={
            "k": 16,
            "expanded_rank": 15,
            "syndrome": ("a**22", "a**13", "a**14", "a**26", "a**19", "a**28"),
            "hankel": (
                ("a**22", "a**13", "a**14", "a**26"),
                ("a**13", "a**14", "a**26", "a**19"),
                ("a**14", "a**26", "a**19", "a**28"),
            ),
            "l": 3,
            "positions": (5, 19, 28),
            "values": (1, 1, 1),
        },
    ),
    DemoCase(
        name="grs32-three-errors",
        code="grs32",
        y=_sparse(31, {8: "a**5", 9: 1, 26: "a**19"}),
        expect={
            "k": 25,
            "syndrome": ("a**16", 1, "a**30", "a**14", "a**25", "a**28"),
            "hankel": (
                ("a**16", 1, "a**30", "a**14"),
                (1, "a**30", "a**14", "a**25"),
                ("a**30", "a**14", "a**25", "a**28"),
            ),
            "l": 3,
            "positions": (8, 9, 26),
            "values": ("a**5", 1, "a**19"),
        },
    ),
    DemoCase(
        name="bch121-five-errors",
        code="bch121",
        y=_sparse(121, {2: 1, 10: 1, 33: 2, 40: 2, 113: 1}),
        expect={
            "k": 86,
            "expanded_rank": 35,
            "l": 5,
            "positions": (2, 10, 33, 40, 113),
            "values": (1, 1, 2, 2, 1),
        },
    ),
    DemoCase(
        name="goppa19-three-errors",
        code="goppa19",
        y=_sparse(19, {1: 1, 5: 3, 7: 4}),
        expect={
            "n": 19,
            "k": 7,
            "expanded_rank": 12,
            "l": 3,
            "positions": (1, 5, 7),
            "values": (1, 3, 4),
        },
    ),
    DemoCase(
        name="goppa76-five-errors",
        code="goppa76",
        y=_sparse(76, {10: 2, 46: 2, 56: 1, 63: 1, 67: 2}),
        algorithm="pgzm",
        expect={
            "n": 76,
            "k": 44,
            "expanded_rank": 32,
            "l": 5,
            "positions": (10, 46, 56, 63, 67),
            "values": (2, 2, 1, 1, 2),
        },
    ),
)


@dataclass
class CaseResult:
    name: str
    ok: bool
    diffs: list


def _codes_of(F, tokens):
    return tuple(F.element(t).code for t in tokens)


def run_case(case: DemoCase) -> CaseResult:
    """Replay one case with both decoders and diff against expectations."""
    diffs: list[str] = []

    def check(what, got, want):
        if got != want:
            diffs.append(f"{what}: expected {want!r}, got {got!r}")

    C = demo_code(case.code)
    K, F = C.base_field, C.ext_field
    exp = case.expect

    if "n" in exp:
        check("n", C.n, exp["n"])
    if "k" in exp:
        check("k", C.k, exp["k"])
    if "triple" in exp:
        check("[n,k,d]", (C.n, C.k, C.d_bound), exp["triple"])
    if "expanded_rank" in exp:
        check("rank of expanded H", rank(expand(C.H, K)), exp["expanded_rank"])
    if "support" in exp:
        check("support", C.alpha, Vec.of(F, exp["support"]))
    if "control_matrix" in exp:
        check("control matrix", C.H, Mat.of(F, exp["control_matrix"]))

    y = Vec.of(K, case.y)
    primary = pgz if case.algorithm == "pgz" else pgzm
    secondary = pgzm if case.algorithm == "pgz" else pgz
    rep = primary(y, C)
    check("status", rep.status, Status.CORRECTED)
    if rep.status is not Status.CORRECTED:
        return CaseResult(case.name, False, diffs)

    if "syndrome" in exp:
        check("syndrome", rep.syndrome.codes, _codes_of(F, exp["syndrome"]))
    if "hankel" in exp:
        check("hankel matrix", tuple(rep.hankel.rows),
              tuple(_codes_of(F, row) for row in exp["hankel"]))
    if "l" in exp:
        check("error count l", rep.l, exp["l"])
    if "locator" in exp:
        check("locator polynomial", rep.locator_poly.codes,
              _codes_of(F, exp["locator"]))
    if "evaluator" in exp and rep.evaluator_poly is not None:
        check("evaluator polynomial", rep.evaluator_poly.codes,
              _codes_of(F, exp["evaluator"]))
    if "positions" in exp:
        check("positions", tuple(rep.positions), exp["positions"])
    if "locators" in exp:
        check("locators", tuple(e.code for e in rep.locators),
              _codes_of(F, exp["locators"]))
    if "values" in exp:
        check("values", tuple(e.code for e in rep.values),
              _codes_of(K, exp["values"]))
    if not rep.corrected.is_zero:
        diffs.append(f"corrected word is not the zero word: {rep.corrected}")
    if "report_lines" in exp:
        check("report text", tuple(rep.render()), exp["report_lines"])

    # the other decoder must reach the identical conclusion
    rep2 = secondary(y, C)
    check("other decoder status", rep2.status, rep.status)
    check("other decoder positions", tuple(rep2.positions), tuple(rep.positions))
    check("other decoder values", [e.code for e in rep2.values],
          [e.code for e in rep.values])

    return CaseResult(case.name, not diffs, diffs)


def run_demo() -> list[CaseResult]:
    return [run_case(case) for case in CASES]
