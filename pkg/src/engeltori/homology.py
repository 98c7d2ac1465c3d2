"""Exact integer homology: Smith normal form, abelian groups, chain complexes.

Matrices act on column vectors. A boundary map ``C_k -> C_{k-1}`` is stored
with ``dim C_{k-1}`` rows and ``dim C_k`` columns. Presentation matrices for
abelian groups are the exception: there each *row* is a relation among the
generators indexing the columns.

All arithmetic is on Python ints, so nothing overflows.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Callable, Iterable, Optional, Sequence

from .errors import Cancelled, NotAComplex, ShapeMismatch, TorsionCoordinate


# --------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    data: tuple  # tuple of row tuples

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch("matrix dimensions must be nonnegative")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ShapeMismatch(
                f"entry count does not match a {self.rows}x{self.cols} shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: Optional[int] = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        if not data and cols:
            return cls(0, cols, ())
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, entries: Sequence[int], rows: Optional[int] = None,
             cols: Optional[int] = None) -> "IntMatrix":
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        return cls(rows, cols, tuple(
            tuple(entries[i] if i == j and i < len(entries) else 0 for j in range(cols))
            for i in range(rows)))

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.data[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ocols = list(zip(*other.data)) if other.rows else [()] * other.cols
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in ocols) for r in self.data))

    def apply(self, v: Sequence[int]) -> tuple:
        if len(v) != self.cols:
            raise ShapeMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.data)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def tolist(self) -> list:
        return [list(r) for r in self.data]


def as_matrix(A) -> IntMatrix:
    return A if isinstance(A, IntMatrix) else IntMatrix.from_rows(A)


def block_diag(*blocks: IntMatrix) -> IntMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            out[r0 + i][c0:c0 + b.cols] = b.data[i]
        r0 += b.rows
        c0 += b.cols
    return IntMatrix.from_rows(out, cols)


def det(A: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise ShapeMismatch("determinant of a non-square matrix")
    n = A.rows
    M = [list(r) for r in A.data]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


# --------------------------------------------------------------------------
# Smith normal form

@dataclass(frozen=True)
class SmithForm:
    """``D = U @ A @ V`` with ``U``, ``V`` unimodular and ``D`` diagonal."""
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    # inverses come for free from the elimination
    U_inv: IntMatrix
    V_inv: IntMatrix

    @property
    def diagonal(self) -> list:
        return [self.D[i, i] for i in range(min(self.D.shape))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def smith_normal_form(A, should_stop: Optional[Callable[[], bool]] = None) -> SmithForm:
    """Smith normal form with smallest-absolute-value pivoting.

    ``should_stop`` is polled once per elimination round; when it returns
    true the computation raises :class:`Cancelled`.
    """
    A = as_matrix(A)
    m, n = A.shape
    M = [list(r) for r in A.data]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    Ui = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vi = [[int(i == j) for j in range(n)] for i in range(n)]

    # Row op "row_i += c * row_j" is left multiplication by E; U <- E U and
    # U_inv <- U_inv E^-1, i.e. column_j(U_inv) -= c * column_i(U_inv).
    def add_row(i, j, c):
        if c:
            Mi, Mj = M[i], M[j]
            for k in range(n):
                Mi[k] += c * Mj[k]
            Ui_, Uj_ = U[i], U[j]
            for k in range(m):
                Ui_[k] += c * Uj_[k]
            for r in Ui:
                r[j] -= c * r[i]

    def swap_rows(i, j):
        if i != j:
            M[i], M[j] = M[j], M[i]
            U[i], U[j] = U[j], U[i]
            for r in Ui:
                r[i], r[j] = r[j], r[i]

    def neg_row(i):
        M[i] = [-x for x in M[i]]
        U[i] = [-x for x in U[i]]
        for r in Ui:
            r[i] = -r[i]

    def add_col(i, j, c):
        # col_i += c * col_j: V <- V E, V_inv <- E^-1 V_inv
        if c:
            for r in M:
                r[i] += c * r[j]
            for r in V:
                r[i] += c * r[j]
            Vi_i, Vi_j = Vi[i], Vi[j]
            for k in range(n):
                Vi_j[k] -= c * Vi_i[k]

    def swap_cols(i, j):
        if i != j:
            for r in M:
                r[i], r[j] = r[j], r[i]
            for r in V:
                r[i], r[j] = r[j], r[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = M[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            if should_stop is not None and should_stop():
                raise Cancelled("smith_normal_form cancelled")
            p = M[t][t]
            dirty = False
            for i in range(t + 1, m):
                if M[i][t]:
                    add_row(i, t, -(M[i][t] // p))
                    if M[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if M[t][j]:
                    add_col(j, t, -(M[t][j] // p))
                    if M[t][j]:
                        dirty = True
            if dirty:
                # a nonzero remainder is smaller than the pivot: move it in
                best = None
                for i in range(t, m):
                    if M[i][t] and (best is None or abs(M[i][t]) < best[0]):
                        best = (abs(M[i][t]), i, t)
                for j in range(t, n):
                    if M[t][j] and abs(M[t][j]) < best[0]:
                        best = (abs(M[t][j]), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            # row and column are clear; enforce divisibility of the rest
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if M[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if M[t][t] < 0:
            neg_row(t)
        t += 1

    def mk(rows, c):
        return IntMatrix.from_rows(rows, c)

    return SmithForm(mk(U, m), mk(M, n), mk(V, n), mk(Ui, m), mk(Vi, n))


def rank(A) -> int:
    return smith_normal_form(A).rank


def kernel_basis(A) -> list:
    """Z-basis of ``{x : A x = 0}`` as a list of tuples."""
    A = as_matrix(A)
    snf = smith_normal_form(A)
    r = snf.rank
    return [tuple(snf.V[i, j] for i in range(A.cols)) for j in range(r, A.cols)]


def solve_integer(A, b) -> Optional[tuple]:
    """An integer solution of ``A x = b`` or None."""
    A = as_matrix(A)
    snf = smith_normal_form(A)
    c = snf.U.apply(tuple(b))
    y = [0] * A.cols
    for i in range(A.rows):
        d = snf.D[i, i] if i < A.cols else 0
        if d == 0:
            if c[i]:
                return None
        elif c[i] % d:
            return None
        else:
            y[i] = c[i] // d
    return snf.V.apply(tuple(y))


# --------------------------------------------------------------------------
# finitely generated abelian groups

def invariant_factors(orders: Iterable[int]) -> list:
    """Canonical invariant factors of a direct sum of cyclic groups.

    Orders 0 and 1 are dropped (0 is a free summand, handled by the caller).
    Replacing pairs ``(a, b)`` by ``(gcd, lcm)`` converges to a divisor chain.
    """
    xs = sorted(abs(int(o)) for o in orders if abs(int(o)) > 1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            a, b = xs[i], xs[j]
            g = gcd(a, b)
            xs[i], xs[j] = g, a // g * b
    return [x for x in xs if x > 1]


@dataclass(frozen=True)
class FgAbGroup:
    free_rank: int = 0
    invariant_factors: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        facs = tuple(int(d) for d in self.invariant_factors)
        if any(d < 2 for d in facs) or any(b % a for a, b in zip(facs, facs[1:])):
            raise ValueError(f"not an invariant factor chain: {facs}")
        object.__setattr__(self, "invariant_factors", facs)

    @classmethod
    def from_cyclic(cls, free_rank: int = 0, orders: Iterable[int] = ()) -> "FgAbGroup":
        orders = list(orders)
        extra = sum(1 for o in orders if o == 0)
        return cls(free_rank + extra, tuple(invariant_factors(orders)))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_free(self) -> bool:
        return not self.invariant_factors

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.invariant_factors)

    def __add__(self, other: "FgAbGroup") -> "FgAbGroup":
        return FgAbGroup.from_cyclic(self.free_rank + other.free_rank,
                                     self.invariant_factors + other.invariant_factors)

    def tensor(self, other: "FgAbGroup") -> "FgAbGroup":
        a, b = self.invariant_factors, other.invariant_factors
        orders = [d for d in b for _ in range(self.free_rank)]
        orders += [d for d in a for _ in range(other.free_rank)]
        orders += [gcd(x, y) for x in a for y in b]
        return FgAbGroup.from_cyclic(self.free_rank * other.free_rank, orders)

    def tor(self, other: "FgAbGroup") -> "FgAbGroup":
        return FgAbGroup.from_cyclic(0, [gcd(x, y) for x in self.invariant_factors
                                         for y in other.invariant_factors])

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.invariant_factors)}

    @classmethod
    def from_json(cls, obj: dict) -> "FgAbGroup":
        return cls.from_cyclic(int(obj.get("free_rank", 0)), obj.get("torsion", ()))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " + ".join(parts) or "0"


Z = FgAbGroup(1)
ZERO = FgAbGroup()


def group_from_presentation(A) -> FgAbGroup:
    """Cokernel of a relation matrix: one generator per column, one relation per row."""
    A = as_matrix(A)
    snf = smith_normal_form(A)
    diag = snf.diagonal
    r = snf.rank
    return FgAbGroup(A.cols - r, tuple(d for d in diag[:r] if d > 1))


@dataclass(frozen=True, eq=False)
class GradedGroup:
    """Groups indexed by degree 0, 1, ...; missing degrees are zero."""
    groups: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))

    def __getitem__(self, k: int) -> FgAbGroup:
        return self.groups[k] if 0 <= k < len(self.groups) else ZERO

    def __len__(self):
        return len(self.groups)

    def _trimmed(self) -> tuple:
        g = list(self.groups)
        while g and g[-1].is_trivial:
            g.pop()
        return tuple(g)

    def __eq__(self, other):
        if isinstance(other, GradedGroup):
            return self._trimmed() == other._trimmed()
        return NotImplemented

    def __hash__(self):
        return hash(self._trimmed())

    @property
    def top(self) -> int:
        return len(self._trimmed()) - 1

    def to_json(self) -> dict:
        return {"groups": [g.to_json() for g in self.groups]}

    @classmethod
    def from_json(cls, obj) -> "GradedGroup":
        items = obj["groups"] if isinstance(obj, dict) else obj
        return cls(tuple(FgAbGroup.from_json(g) for g in items))

    @classmethod
    def of(cls, *groups) -> "GradedGroup":
        """Shorthand: ints are free ranks, tuples ``(rank, [torsion])``."""
        out = []
        for g in groups:
            if isinstance(g, FgAbGroup):
                out.append(g)
            elif isinstance(g, int):
                out.append(FgAbGroup(g))
            else:
                out.append(FgAbGroup.from_cyclic(g[0], g[1]))
        return cls(tuple(out))

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.groups) + ")"


# --------------------------------------------------------------------------
# chain complexes

@dataclass(frozen=True)
class ChainComplex:
    """``boundaries[k-1]`` is the map ``C_k -> C_{k-1}``."""
    dims: tuple
    boundaries: tuple = ()

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        bds = []
        for k, B in enumerate(self.boundaries, start=1):
            B = as_matrix(B)
            if k >= len(dims):
                raise NotAComplex(f"boundary map in degree {k} but top degree is {len(dims) - 1}")
            want = (dims[k - 1], dims[k])
            if B.shape != want:
                # [] is ambiguous; read an empty matrix as the zero map
                if B.rows * B.cols == 0 and want[0] * want[1] == 0:
                    B = IntMatrix.zeros(*want)
                else:
                    raise NotAComplex(
                        f"boundary_{k} has shape {B.shape}, expected {want}")
            bds.append(B)
        for k in range(len(bds) + 1, len(dims)):
            bds.append(IntMatrix.zeros(dims[k - 1], dims[k]))
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "boundaries", tuple(bds))

    def boundary(self, k: int) -> IntMatrix:
        """The map ``C_k -> C_{k-1}``, zero outside the stored range."""
        if 1 <= k < len(self.dims):
            return self.boundaries[k - 1]
        return IntMatrix.zeros(self.dim(k - 1), self.dim(k))

    def dim(self, k: int) -> int:
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    def check(self) -> None:
        for k in range(2, len(self.dims)):
            if not (self.boundary(k - 1) @ self.boundary(k)).is_zero():
                raise NotAComplex(f"boundary_{k - 1} o boundary_{k} != 0")

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "boundaries": [B.tolist() for B in self.boundaries]}

    @classmethod
    def from_json(cls, obj: dict) -> "ChainComplex":
        dims = obj["dims"]
        bds = []
        for k, rows in enumerate(obj.get("boundaries", []), start=1):
            cols = dims[k] if k < len(dims) else None
            bds.append(IntMatrix.from_rows(rows, cols))
        return cls(tuple(dims), tuple(bds))


def homology(C: ChainComplex) -> GradedGroup:
    C.check()
    snfs = [smith_normal_form(C.boundary(k)) for k in range(len(C.dims) + 1)]
    groups = []
    for k, n in enumerate(C.dims):
        r_out = snfs[k].rank if k > 0 else 0
        into = snfs[k + 1] if k + 1 < len(C.dims) else None
        r_in = into.rank if into else 0
        tors = tuple(d for d in into.diagonal[:r_in] if d > 1) if into else ()
        groups.append(FgAbGroup(n - r_out - r_in, tors))
    return GradedGroup(tuple(groups))


def tensor(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    """Tensor product with ``d(a x b) = da x b + (-1)^|a| a x db``."""
    C.check()
    D.check()
    top = len(C.dims) + len(D.dims) - 2
    # basis of degree n: blocks (i, j=n-i) in order of i, entries a*dim D_j + b
    offsets = []
    dims = []
    for n in range(top + 1):
        off, total = {}, 0
        for i in range(n + 1):
            j = n - i
            if C.dim(i) and D.dim(j):
                off[i] = total
                total += C.dim(i) * D.dim(j)
        offsets.append(off)
        dims.append(total)
    bds = []
    for n in range(1, top + 1):
        M = [[0] * dims[n] for _ in range(dims[n - 1])]
        src, dst = offsets[n], offsets[n - 1]
        for i, o in src.items():
            j = n - i
            dc, dd = C.boundary(i), D.boundary(j)
            nD = D.dim(j)
            sgn = -1 if i % 2 else 1
            for a, b in product(range(C.dim(i)), range(nD)):
                col = o + a * nD + b
                if i - 1 in dst:  # da x b
                    o2 = dst[i - 1]
                    for a2 in range(C.dim(i - 1)):
                        x = dc[a2, a]
                        if x:
                            M[o2 + a2 * nD + b][col] += x
                if i in dst and j >= 1:  # a x db
                    o2 = dst[i]
                    nD2 = D.dim(j - 1)
                    for b2 in range(nD2):
                        x = dd[b2, b]
                        if x:
                            M[o2 + a * nD2 + b2][col] += sgn * x
        bds.append(IntMatrix.from_rows(M, dims[n]))
    return ChainComplex(tuple(dims), tuple(bds))


def kunneth_predict(A: GradedGroup, B: GradedGroup) -> GradedGroup:
    top = max(len(A) + len(B) - 1, 0)
    out = []
    for k in range(top + 1):
        g = ZERO
        for i in range(k + 1):
            g = g + A[i].tensor(B[k - i])
        for i in range(k):
            g = g + A[i].tor(B[k - 1 - i])
        out.append(g)
    return GradedGroup(tuple(out))


def cohomology_from_homology(H: GradedGroup, top: Optional[int] = None) -> GradedGroup:
    """Universal coefficients: ``H^q = free(H_q) + torsion(H_{q-1})``."""
    top = len(H) if top is None else top
    return GradedGroup(tuple(
        FgAbGroup(H[q].free_rank, H[q - 1].invariant_factors if q else ())
        for q in range(top + 1)))


def reduce_degree0(G: GradedGroup) -> GradedGroup:
    if not len(G) or G[0].free_rank == 0:
        return G
    g0 = FgAbGroup(G[0].free_rank - 1, G[0].invariant_factors)
    return GradedGroup((g0,) + G.groups[1:])


def alexander_duality(n: int, K: GradedGroup) -> GradedGroup:
    """Reduced homology of ``S^n - K`` in degrees ``0 .. n-1``.

    ``K`` is the (unreduced) homology of a nonempty compact subcomplex.
    """
    coh = reduce_degree0(cohomology_from_homology(K, top=n))
    return GradedGroup(tuple(coh[n - i - 1] for i in range(n)))


# --------------------------------------------------------------------------
# exactness and divisibility

def zero_map(src: int, dst: int) -> IntMatrix:
    return IntMatrix.zeros(dst, src)


def is_exact(seq: Sequence) -> bool:
    """``seq[i]: G_i -> G_{i+1}``; checks ``im seq[i-1] == ker seq[i]`` at every
    interior term. Bracket the sequence with :func:`zero_map` for the ends."""
    maps = [as_matrix(f) for f in seq]
    for f, g in zip(maps, maps[1:]):
        if g.cols != f.rows:
            raise ShapeMismatch(
                f"map of shape {f.shape} followed by map of shape {g.shape}")
    for f, g in zip(maps, maps[1:]):
        if not (g @ f).is_zero():
            return False
        for v in kernel_basis(g):
            if solve_integer(f, v) is None:
                return False
    return True


def _split_coords(v: Sequence[int], G: Optional[FgAbGroup]) -> list:
    v = [int(x) for x in v]
    if G is None:
        return v
    if len(v) == G.free_rank:
        return v
    if len(v) != G.ngens:
        raise ShapeMismatch(
            f"vector of length {len(v)} in a group with {G.ngens} generators")
    tors = v[G.free_rank:]
    if any(t % d for t, d in zip(tors, G.invariant_factors)):
        raise TorsionCoordinate("divisibility is only defined on the free part")
    return v[:G.free_rank]


def divisibility(v: Sequence[int], G: Optional[FgAbGroup] = None) -> int:
    """gcd of the free coordinates; 0 for the zero vector."""
    g = 0
    for x in _split_coords(v, G):
        g = gcd(g, x)
    return g


def is_primitive(v: Sequence[int], G: Optional[FgAbGroup] = None) -> bool:
    return divisibility(v, G) == 1
