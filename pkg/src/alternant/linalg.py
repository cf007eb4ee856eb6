"""Exact vectors, matrices, and deterministic Gauss-Jordan elimination.

Everything is over a Field from .galois and carried as tuples of canonical
integer codes, so results are reproducible bit for bit: pivoting always
takes the first nonzero entry scanning down the current column, rows are
processed top-down and columns left-to-right, and there are no tolerances.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .galois import Field, FieldElement


class SingularSystem(ValueError):
    """Raised by solve_square when the coefficient matrix is singular."""


class MalformedSyndromeStructure(ValueError):
    """Raised when a reduced Hankel matrix violates the expected pivot layout."""


class Vec:
    """Immutable row vector of field elements (stored as integer codes)."""

    __slots__ = ("field", "codes")

    def __init__(self, field: Field, codes: Iterable[int]):
        self.field = field
        self.codes = tuple(codes)
        if not self.codes:
            raise ValueError("empty vectors are not supported")

    @classmethod
    def of(cls, field: Field, items) -> "Vec":
        """Build from ints, element tokens, or FieldElements."""
        if isinstance(items, Vec):
            if items.field != field:
                raise TypeError(f"vector over {items.field.name}, expected {field.name}")
            return items
        return cls(field, (field.element(v).code for v in items))

    def __len__(self):
        return len(self.codes)

    def __getitem__(self, i) -> FieldElement:
        if isinstance(i, slice):
            return Vec(self.field, self.codes[i])
        return FieldElement(self.field, self.codes[i])

    def __iter__(self):
        F = self.field
        return (FieldElement(F, c) for c in self.codes)

    def __eq__(self, other):
        if isinstance(other, Vec):
            return self.field == other.field and self.codes == other.codes
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.modulus_codes, self.codes))

    def __add__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        _check_same_field(self.field, other.field)
        if len(self) != len(other):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")
        addc = self.field.addc
        return Vec(self.field, (addc(a, b) for a, b in zip(self.codes, other.codes)))

    def __sub__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        _check_same_field(self.field, other.field)
        if len(self) != len(other):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")
        subc = self.field.subc
        return Vec(self.field, (subc(a, b) for a, b in zip(self.codes, other.codes)))

    def __matmul__(self, M: "Mat") -> "Vec":
        """Row vector times matrix."""
        if not isinstance(M, Mat):
            return NotImplemented
        _check_same_field(self.field, M.field)
        if len(self) != M.nrows:
            raise ValueError(f"shape mismatch: 1x{len(self)} @ {M.nrows}x{M.ncols}")
        F = self.field
        mulc, addc = F.mulc, F.addc
        out = [0] * M.ncols
        for c, row in zip(self.codes, M.rows):
            if c:
                out = [addc(acc, mulc(c, r)) for acc, r in zip(out, row)]
        return Vec(F, out)

    def scale(self, s) -> "Vec":
        sc = self.field.element(s).code
        mulc = self.field.mulc
        return Vec(self.field, (mulc(sc, c) for c in self.codes))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.codes)

    def weight(self) -> int:
        return sum(1 for c in self.codes if c)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.codes) if c)

    def __str__(self):
        fmt = self.field.format_code
        return "[" + ", ".join(fmt(c) for c in self.codes) + "]"

    def __repr__(self):
        return f"Vec[{self.field.name}]{self}"


class Mat:
    """Immutable matrix of field elements (stored as tuples of integer codes)."""

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Iterable[int]], ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise ValueError("ncols disagrees with row length")
        else:
            if ncols is None:
                raise ValueError("a 0-row matrix needs an explicit column count")
            self.ncols = ncols
        if self.ncols == 0:
            raise ValueError("matrices need at least one column")

    @classmethod
    def of(cls, field: Field, rows) -> "Mat":
        return cls(field, ((field.element(v).code for v in row) for row in rows))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        return cls(field, ((1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.rows[i][j])

    def row(self, i: int) -> Vec:
        return Vec(self.field, self.rows[i])

    def col(self, j: int) -> Vec:
        return Vec(self.field, (r[j] for r in self.rows))

    def transpose(self) -> "Mat":
        if not self.rows:
            raise ValueError("cannot transpose a 0-row matrix")
        return Mat(self.field, zip(*self.rows))

    def __matmul__(self, other):
        F = self.field
        if isinstance(other, Mat):
            _check_same_field(F, other.field)
            if self.ncols != other.nrows:
                raise ValueError(
                    f"shape mismatch: {self.shape} @ {other.shape}")
            mulc, addc = F.mulc, F.addc
            bcols = tuple(zip(*other.rows))
            out = []
            for row in self.rows:
                orow = []
                for bc in bcols:
                    acc = 0
                    for a, b in zip(row, bc):
                        if a and b:
                            acc = addc(acc, mulc(a, b))
                    orow.append(acc)
                out.append(orow)
            return Mat(F, out, ncols=other.ncols)
        if isinstance(other, Vec):
            _check_same_field(F, other.field)
            if self.ncols != len(other):
                raise ValueError(f"shape mismatch: {self.shape} @ {len(other)}")
            mulc, addc = F.mulc, F.addc
            out = []
            for row in self.rows:
                acc = 0
                for a, b in zip(row, other.codes):
                    if a and b:
                        acc = addc(acc, mulc(a, b))
                out.append(acc)
            return Vec(F, out)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Mat):
            return (self.field == other.field and self.ncols == other.ncols
                    and self.rows == other.rows)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.modulus_codes, self.ncols, self.rows))

    def __str__(self):
        fmt = self.field.format_code
        cells = [[fmt(c) for c in row] for row in self.rows]
        if not cells:
            return f"[[]] (0x{self.ncols})"
        widths = [max(len(cells[i][j]) for i in range(len(cells)))
                  for j in range(self.ncols)]
        lines = []
        for i, row in enumerate(cells):
            body = " ".join(s.rjust(w) for s, w in zip(row, widths))
            open_b = "[[" if i == 0 else " ["
            close_b = "]]" if i == len(cells) - 1 else "]"
            lines.append(open_b + body + close_b)
        return "\n".join(lines)

    def __repr__(self):
        return f"Mat[{self.field.name} {self.nrows}x{self.ncols}]\n{self}"


def _check_same_field(a: Field, b: Field):
    if a != b:
        raise TypeError(f"mixed fields: {a.name} and {b.name}")


def vandermonde(r: int, alphas: Vec) -> Mat:
    """The r x n matrix with entry (i, j) = alphas[j]^i."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    F = alphas.field
    rows = [[1] * len(alphas)]
    cur = list(alphas.codes)
    for _ in range(r - 1):
        rows.append(cur)
        mulc = F.mulc
        cur = [mulc(c, a) for c, a in zip(cur, alphas.codes)]
    return Mat(F, rows[:r])


def hankel_matrix(s: Vec, t: int) -> Mat:
    """The t x (t+1) Hankel matrix with entry (i, j) = s[i+j].

    Uses entries s_0 .. s_{2t-1} only; s must supply at least 2t of them.
    """
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    if len(s) < 2 * t:
        raise ValueError(f"need at least {2 * t} syndrome entries, got {len(s)}")
    return Mat(s.field, ((s.codes[i + j] for j in range(t + 1)) for i in range(t)))


class GJResult(NamedTuple):
    rank: int
    rref: Mat
    pivots: tuple[int, ...]


def gauss_jordan(M: Mat) -> GJResult:
    """Reduced row echelon form with deterministic pivoting.

    For each column left-to-right the first nonzero entry at or below the
    current row becomes the pivot; zero rows end up at the bottom.
    """
    F = M.field
    a = [list(r) for r in M.rows]
    nrows, ncols = M.nrows, M.ncols
    mulc, subc, invc = F.mulc, F.subc, F.invc
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = invc(a[r][c])
        if inv != 1:
            a[r] = [mulc(inv, v) for v in a[r]]
        prow = a[r]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [subc(v, mulc(f, pv)) for v, pv in zip(a[i], prow)]
        pivots.append(c)
        r += 1
    return GJResult(r, Mat(F, a, ncols=ncols), tuple(pivots))


def rank(M: Mat) -> int:
    return gauss_jordan(M).rank


def gj_locator(S: Mat) -> Vec:
    """Locator coefficients read off the reduced Hankel matrix.

    For a syndrome Hankel matrix of rank l the reduction must place pivots
    in columns 0..l-1; rows 0..l-1 of column l then hold
    (-a_l, ..., -a_1), where z^l + a_1 z^(l-1) + ... + a_l is the error
    locator.  Any other pivot layout (including rank 0) raises
    MalformedSyndromeStructure.
    """
    res = gauss_jordan(S)
    l = res.rank
    if l == 0:
        raise MalformedSyndromeStructure(
            "syndrome Hankel matrix reduced to rank 0")
    if res.pivots != tuple(range(l)):
        raise MalformedSyndromeStructure(
            f"pivot columns {res.pivots} deviate from (0..{l - 1})")
    if l >= S.ncols:
        raise MalformedSyndromeStructure(
            f"rank {l} leaves no locator column in a {S.nrows}x{S.ncols} matrix")
    return Vec(S.field, (res.rref.rows[i][l] for i in range(l)))


def expand(M: Mat, K: Field) -> Mat:
    """Rewrite each row over the prime subfield K, one row per coordinate.

    Every entry is replaced by its coordinate vector over K, so each source
    row becomes m rows and the column count is unchanged.  Solution sets over
    K are preserved.  With K equal to the entry field this is the identity.
    """
    F = M.field
    if F == K:
        return M
    if K.m != 1 or K.p != F.p:
        raise TypeError(f"{K.name} is not the prime subfield of {F.name}")
    m = F.m
    out = []
    for row in M.rows:
        coords = [F._digits(c) for c in row]
        for k in range(m):
            out.append([d[k] for d in coords])
    return Mat(K, out, ncols=M.ncols)


def prune(M: Mat) -> Mat:
    """Keep exactly the rows that strictly increase the rank, scanning top-down."""
    F = M.field
    mulc, subc, invc = F.mulc, F.subc, F.invc
    basis = []  # rows in echelon form, each paired with its pivot column
    kept = []
    for row in M.rows:
        work = list(row)
        for prow, pc in basis:
            if work[pc]:
                f = work[pc]
                work = [subc(v, mulc(f, pv)) for v, pv in zip(work, prow)]
        pc = next((j for j, v in enumerate(work) if v), None)
        if pc is None:
            continue
        inv = invc(work[pc])
        if inv != 1:
            work = [mulc(inv, v) for v in work]
        basis.append((work, pc))
        kept.append(row)
    return Mat(F, kept, ncols=M.ncols)


def null_space(M: Mat) -> Mat:
    """Rows form a deterministic basis of {x : M @ x = 0}.

    May have zero rows (full column rank).  Basis vectors are indexed by the
    free columns of the reduced form, ascending, via back-substitution.
    """
    F = M.field
    res = gauss_jordan(M)
    piv = res.pivots
    free = [j for j in range(M.ncols) if j not in set(piv)]
    negc = F.negc
    out = []
    for f in free:
        x = [0] * M.ncols
        x[f] = 1
        for i, pc in enumerate(piv):
            x[pc] = negc(res.rref.rows[i][f])
        out.append(x)
    return Mat(F, out, ncols=M.ncols)


def solve_square(A: Mat, b: Vec) -> Vec:
    """Solve A x = b for square A by Gauss-Jordan on the augmented matrix."""
    _check_same_field(A.field, b.field)
    n = A.nrows
    if A.ncols != n:
        raise ValueError(f"matrix is {A.shape}, not square")
    if len(b) != n:
        raise ValueError(f"right-hand side has length {len(b)}, expected {n}")
    aug = Mat(A.field, (row + (bc,) for row, bc in zip(A.rows, b.codes)),
              ncols=n + 1)
    res = gauss_jordan(aug)
    if res.rank != n or res.pivots != tuple(range(n)):
        raise SingularSystem(f"{n}x{n} system is singular")
    return Vec(A.field, (res.rref.rows[i][n] for i in range(n)))
