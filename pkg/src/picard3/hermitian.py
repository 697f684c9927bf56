"""The hermitian lattice E^{1,3}: Gram models, pairings, reflections.

Two Gram presentations are used.  DIAG is diag(1,-1,-1,-1); HYP has the
hyperbolic 2x2 block [[0,1],[1,0]] followed by diag(-1,-1).  The pairing
is conjugate-linear in the first slot.  All discriminant-form arithmetic
happens on the DIAG side, all group computations on the HYP side, and
``find_isometry`` is the single bridge between the two.
"""

from __future__ import annotations

from .eisenstein import (
    EisInt,
    CycRat,
    ONE,
    ZERO,
    W,
    root_order,
)

Vec4 = tuple[EisInt, EisInt, EisInt, EisInt]
Mat4 = tuple[tuple[EisInt, ...], ...]

DIAG = "DIAG"
HYP = "HYP"


def _e(a, b=0):
    return EisInt(a, b)


GRAM = {
    DIAG: (
        (_e(1), _e(0), _e(0), _e(0)),
        (_e(0), _e(-1), _e(0), _e(0)),
        (_e(0), _e(0), _e(-1), _e(0)),
        (_e(0), _e(0), _e(0), _e(-1)),
    ),
    HYP: (
        (_e(0), _e(1), _e(0), _e(0)),
        (_e(1), _e(0), _e(0), _e(0)),
        (_e(0), _e(0), _e(-1), _e(0)),
        (_e(0), _e(0), _e(0), _e(-1)),
    ),
}


def vec(*coords) -> Vec4:
    """Build a Vec4 from ints, (a, b) pairs, or EisInt entries."""
    out = []
    for c in coords:
        if isinstance(c, EisInt):
            out.append(c)
        elif isinstance(c, tuple):
            out.append(EisInt(*c))
        else:
            out.append(EisInt(c))
    if len(out) != 4:
        raise ValueError("need exactly 4 coordinates")
    return tuple(out)


def herm(model: str, x: Vec4, y: Vec4) -> EisInt:
    """Hermitian pairing <x,y> = conj(x)^T * G * y for the given model."""
    g = GRAM[model]
    total = ZERO
    for i in range(4):
        xi = x[i].conj()
        if not xi:
            continue
        row = g[i]
        for j in range(4):
            if row[j]:
                total = total + xi * row[j] * y[j]
    return total


def herm_norm(model: str, x: Vec4) -> int:
    n = herm(model, x, x)
    if n.b != 0:
        raise AssertionError("hermitian self-pairing must be rational")
    return n.a


def mat_mul(a: Mat4, b: Mat4) -> Mat4:
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(4)), ZERO) for j in range(4))
        for i in range(4)
    )


def mat_vec(m: Mat4, v: Vec4) -> Vec4:
    return tuple(sum((m[i][j] * v[j] for j in range(4)), ZERO) for i in range(4))


def mat_conj_t(m: Mat4) -> Mat4:
    return tuple(tuple(m[j][i].conj() for j in range(4)) for i in range(4))


def mat_eq(a: Mat4, b: Mat4) -> bool:
    return all(a[i][j] == b[i][j] for i in range(4) for j in range(4))


IDENTITY: Mat4 = tuple(
    tuple(ONE if i == j else ZERO for j in range(4)) for i in range(4)
)
MINUS_IDENTITY: Mat4 = tuple(
    tuple(-ONE if i == j else ZERO for j in range(4)) for i in range(4)
)


def is_unitary(model: str, m: Mat4) -> bool:
    """conj(m)^T * G * m == G, exactly over E."""
    g = GRAM[model]
    return mat_eq(mat_mul(mat_conj_t(m), mat_mul(g, m)), g)


def mat_order(m: Mat4, cap: int = 24) -> int:
    x = m
    for k in range(1, cap + 1):
        if mat_eq(x, IDENTITY):
            return k
        x = mat_mul(x, m)
    raise ValueError(f"order exceeds {cap}")


def det(m: Mat4) -> EisInt:
    """4x4 determinant by cofactor expansion, exact over E."""

    def det3(rows, cols):
        (i0, i1, i2), (j0, j1, j2) = rows, cols
        return (
            m[i0][j0] * (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1])
            - m[i0][j1] * (m[i1][j0] * m[i2][j2] - m[i1][j2] * m[i2][j0])
            + m[i0][j2] * (m[i1][j0] * m[i2][j1] - m[i1][j1] * m[i2][j0])
        )

    total = ZERO
    cols = (0, 1, 2, 3)
    for j in range(4):
        rest = tuple(c for c in cols if c != j)
        term = m[0][j] * det3((1, 2, 3), rest)
        total = total + (term if j % 2 == 0 else -term)
    return total


def reflection_matrix(model: str, b: Vec4, eta: CycRat) -> Mat4:
    """Unitary reflection a |-> a - (1-eta) <b,a>/<b,b> b along a norm -1 vector.

    Maps b to eta*b and fixes the orthogonal complement pointwise; its order
    equals the order of eta (2 = biflection, 3 = triflection, 6 = hexflection).
    """
    if herm_norm(model, b) != -1:
        raise ValueError("reflection vector must have norm -1")
    order = root_order(eta)  # raises if eta is not a sixth root of unity
    one_minus_eta = (CycRat(1) - eta).to_eis()
    g = GRAM[model]
    # row vector conj(b)^T * G
    w_row = [sum((b[k].conj() * g[k][j] for k in range(4)), ZERO) for j in range(4)]
    # <b,b> = -1, so R = I + (1-eta) * b * w_row
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            entry = (ONE if i == j else ZERO) + one_minus_eta * b[i] * w_row[j]
            row.append(entry)
        rows.append(tuple(row))
    m = tuple(rows)
    if not is_unitary(model, m):
        raise AssertionError("reflection failed the unitarity identity")
    if mat_order(m) != order:
        raise AssertionError("reflection order does not match the root of unity")
    return m


def find_isometry() -> Mat4:
    """A base change U over E with conj(U)^T * G_DIAG * U = G_HYP.

    The first two columns span a hyperbolic plane inside the diagonal
    model; the last two coordinates are untouched.  det(U) is a unit.
    """
    u = (
        (_e(1), _e(1, 1), _e(0), _e(0)),
        (_e(1), _e(0, 1), _e(0), _e(0)),
        (_e(0), _e(0), _e(1), _e(0)),
        (_e(0), _e(0), _e(0), _e(1)),
    )
    lhs = mat_mul(mat_conj_t(u), mat_mul(GRAM[DIAG], u))
    if not mat_eq(lhs, GRAM[HYP]):
        raise AssertionError("isometry candidate failed the Gram identity")
    if not det(u).is_unit():
        raise AssertionError("isometry determinant is not a unit")
    return u


def mat_inverse_unimodular(m: Mat4) -> Mat4:
    """Inverse of a matrix with unit determinant, via the adjugate."""
    d = det(m)
    if not d.is_unit():
        raise ValueError("matrix is not unimodular over E")
    d_inv = d.conj()  # d * conj(d) = norm(d) = 1 for a unit
    if not (d * d_inv == ONE):
        raise AssertionError("unit inversion failed")

    def minor3(skip_i, skip_j):
        rows = [r for r in range(4) if r != skip_i]
        cols = [c for c in range(4) if c != skip_j]
        a = [[m[r][c] for c in cols] for r in rows]
        return (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )

    inv = []
    for i in range(4):
        row = []
        for j in range(4):
            cof = minor3(j, i)
            if (i + j) % 2 == 1:
                cof = -cof
            row.append(cof * d_inv)
        inv.append(tuple(row))
    out = tuple(inv)
    if not mat_eq(mat_mul(m, out), IDENTITY):
        raise AssertionError("matrix inversion failed")
    return out


def transport_to_hyp(m_diag: Mat4, u: Mat4 | None = None) -> Mat4:
    """Conjugate a DIAG-unitary matrix into the HYP model: U^{-1} M U."""
    if u is None:
        u = find_isometry()
    return mat_mul(mat_inverse_unimodular(u), mat_mul(m_diag, u))


def transport_to_diag(m_hyp: Mat4, u: Mat4 | None = None) -> Mat4:
    """Conjugate a HYP-unitary matrix into the DIAG model: U M U^{-1}."""
    if u is None:
        u = find_isometry()
    return mat_mul(u, mat_mul(m_hyp, mat_inverse_unimodular(u)))


def trace_pairing_mod3(model: str, x: Vec4, y: Vec4) -> int:
    """tr(<x,y>) mod 3; well defined on classes mod sqrt(-3) up to sign."""
    return herm(model, x, y).trace() % 3


def orthogonal_triples(mirrors: list[Vec4], model: str = HYP) -> list[tuple[int, int, int]]:
    """All triples {i,j,k} of mirror indices with pairwise trace-pairing 0 mod 3.

    Indices are 1-based to line up with the published numbering of the
    fifteen short-mirror representatives.
    """
    n = len(mirrors)
    ortho = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            z = trace_pairing_mod3(model, mirrors[i], mirrors[j]) == 0
            ortho[i][j] = ortho[j][i] = z
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if not ortho[i][j]:
                continue
            for k in range(j + 1, n):
                if ortho[i][k] and ortho[j][k]:
                    out.append((i + 1, j + 1, k + 1))
    return out
