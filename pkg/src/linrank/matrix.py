"""Dense matrices over a FieldCtx with exact elimination."""

from .errors import NotSquare, ShapeMismatch, SingularW, InternalInconsistency


class MatrixF:
    """Immutable rows x cols grid of field elements (row-major tuples)."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx, entries, rows=None, cols=None):
        entries = tuple(tuple(r) for r in entries)
        self.rows = len(entries) if rows is None else rows
        self.cols = (len(entries[0]) if entries else 0) if cols is None else cols
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise ShapeMismatch("ragged or mis-sized entry grid")
        for r in entries:
            for a in r:
                ctx.check(a)
        self.ctx = ctx
        self.entries = entries

    @classmethod
    def zeros(cls, ctx, rows, cols):
        return cls(ctx, [[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, ctx, k):
        return cls(ctx, [[int(i == j) for j in range(k)] for i in range(k)], k, k)

    @classmethod
    def empty(cls, ctx):
        return cls(ctx, [], 0, 0)

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def __eq__(self, other):
        return (isinstance(other, MatrixF) and self.shape == other.shape
                and self.entries == other.entries)

    def __repr__(self):
        return f"MatrixF({self.rows}x{self.cols}, {[list(r) for r in self.entries]})"

    def tolist(self):
        return [list(r) for r in self.entries]

    def transpose(self):
        return MatrixF(self.ctx, zip(*self.entries) if self.rows else [],
                       self.cols, self.rows)

    def submatrix(self, rows, cols):
        rows, cols = list(rows), list(cols)
        return MatrixF(self.ctx, [[self.entries[r][c] for c in cols] for r in rows],
                       len(rows), len(cols))

    def delete(self, rows=(), cols=()):
        rows, cols = set(rows), set(cols)
        return self.submatrix([r for r in range(self.rows) if r not in rows],
                              [c for c in range(self.cols) if c not in cols])

    def __add__(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        F = self.ctx
        return MatrixF(F, [[F.add(a, b) for a, b in zip(r, s)]
                           for r, s in zip(self.entries, other.entries)],
                       self.rows, self.cols)

    def __neg__(self):
        F = self.ctx
        return MatrixF(F, [[F.neg(a) for a in r] for r in self.entries],
                       self.rows, self.cols)

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        F = self.ctx
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = [[F.sum(F.mul(a, b) for a, b in zip(r, c)) for c in cols]
               for r in self.entries]
        return MatrixF(F, out, self.rows, other.cols)

    def scale(self, alpha):
        F = self.ctx
        return MatrixF(F, [[F.mul(alpha, a) for a in r] for r in self.entries],
                       self.rows, self.cols)

    def map(self, fn):
        return MatrixF(self.ctx, [[fn(a) for a in r] for r in self.entries],
                       self.rows, self.cols)


def hstack(*blocks):
    ctx = blocks[0].ctx
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ShapeMismatch("hstack needs equal row counts")
    return MatrixF(ctx, [sum((b.entries[r] for b in blocks), ()) for r in range(rows)],
                   rows, sum(b.cols for b in blocks))


def vstack(*blocks):
    ctx = blocks[0].ctx
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise ShapeMismatch("vstack needs equal column counts")
    return MatrixF(ctx, sum((b.entries for b in blocks), ()),
                   sum(b.rows for b in blocks), cols)


def _echelon(M, stop_at_singular=False):
    """Forward elimination on a copy.  Returns (rank, det-or-None)."""
    F = M.ctx
    a = [list(r) for r in M.entries]
    rows, cols = M.rows, M.cols
    det, rank = 1, 0
    for c in range(cols):
        if rank == rows:
            break
        piv = next((r for r in range(rank, rows) if a[r][c]), None)
        if piv is None:
            if stop_at_singular:
                return rank, 0
            continue
        if piv != rank:
            a[piv], a[rank] = a[rank], a[piv]
            det = F.neg(det)
        pv = a[rank][c]
        det = F.mul(det, pv)
        inv = F.inv(pv)
        top = a[rank]
        for r in range(rank + 1, rows):
            x = a[r][c]
            if x:
                f = F.mul(x, inv)
                row = a[r]
                for j in range(c, cols):
                    if top[j]:
                        row[j] = F.sub(row[j], F.mul(f, top[j]))
        rank += 1
    return rank, det


def det(M):
    if M.rows != M.cols:
        raise NotSquare(f"determinant of a {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return 1
    rank, d = _echelon(M, stop_at_singular=True)
    return d if rank == M.rows else 0


def rank_nullity(M):
    rank, _ = _echelon(M)
    return rank, M.cols - rank


def inverse(M):
    """Gauss-Jordan inverse; raises SingularW when M is singular."""
    if M.rows != M.cols:
        raise NotSquare("inverse of a non-square matrix")
    F, k = M.ctx, M.rows
    a = [list(r) + [int(i == j) for j in range(k)] for i, r in enumerate(M.entries)]
    for c in range(k):
        piv = next((r for r in range(c, k) if a[r][c]), None)
        if piv is None:
            raise SingularW("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = F.inv(a[c][c])
        a[c] = [F.mul(inv, x) for x in a[c]]
        for r in range(k):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], a[c])]
    return MatrixF(F, [r[k:] for r in a], k, k)


def schur_block_det(X, Y, Z, W):
    """det of [[X, Y], [Z, W]] computed as det(W) det(X - Y W^-1 Z)."""
    if W.rows != W.cols:
        raise ShapeMismatch("W must be square")
    if (X.rows != Y.rows or Z.rows != W.rows or X.cols != Z.cols
            or Y.cols != W.cols or X.rows != X.cols):
        raise ShapeMismatch("incompatible block shapes")
    if det(W) == 0:
        raise SingularW("W is singular")
    Winv = inverse(W)
    return X.ctx.mul(det(W), det(X - Y @ Winv @ Z))


def bordered_blocks(A, B, C):
    """Assemble M = [[A, B, C], [I_l, O, -I_l]] and N = [B, A + C]."""
    k, l = A.rows, A.cols
    if C.shape != (k, l) or B.shape != (k, k - l) or l > k:
        raise ShapeMismatch("need A, C of shape k x l and B of shape k x (k - l)")
    F = A.ctx
    I = MatrixF.identity(F, l)
    top = hstack(A, B, C)
    bottom = hstack(I, MatrixF.zeros(F, l, k - l), -I)
    return vstack(top, bottom), hstack(B, A + C)


def bordered_block_det(A, B, C):
    """det(M) for the bordered block matrix; checked against +-det(N)."""
    M, N = bordered_blocks(A, B, C)
    F = A.ctx
    k, l = A.rows, A.cols
    dM = det(M)
    sign = 1 if l * (k - l + 1) % 2 == 0 else F.minus_one()
    if dM != F.mul(sign, det(N)):
        raise InternalInconsistency("bordered block identity failed")
    return dM
