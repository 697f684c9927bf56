"""Finite quadratic form on the discriminant group of E^{1,3}, and the
Borcherds obstruction space.

The dual quotient is F_3^4 (81 elements, indexed by base-3 digits in the
DIAG model).  q-values are stored in thirds: qbar(x) = Q(x)/3 mod 1 with
Q in {0,1,2}.  With integer lifts in {0,1,-1},

    Q(x)    = x0^2 - x1^2 - x2^2 - x3^2           (mod 3)
    B(x, y) = 2*(x0 y0 - x1 y1 - x2 y2 - x3 y3)   (mod 3),

and B(x,y) = Q(x+y) - Q(x) - Q(y).  The obstruction system couples the
coordinates C_x through the root-of-unity matrix w^B(x,y); classes whose
lifts scale to norm -1/3 dual vectors (Q = 2 here) carry the support.
"""

from __future__ import annotations

from fractions import Fraction

from .eisenstein import CycRat, CYC_W

N_ELEMENTS = 81
SIGNS = (1, -1, -1, -1)


def digits(idx: int) -> tuple[int, int, int, int]:
    return (idx % 3, (idx // 3) % 3, (idx // 9) % 3, (idx // 27) % 3)


def index_of(d) -> int:
    return d[0] % 3 + 3 * (d[1] % 3) + 9 * (d[2] % 3) + 27 * (d[3] % 3)


def neg_index(idx: int) -> int:
    d = digits(idx)
    return index_of(tuple(-c for c in d))


def add_index(i: int, j: int) -> int:
    a, b = digits(i), digits(j)
    return index_of(tuple(x + y for x, y in zip(a, b)))


class DiscForm:
    """q-value and pairing tables for the 81-element discriminant group."""

    def __init__(self):
        self.q = [0] * N_ELEMENTS  # value in thirds, 0..2
        for idx in range(N_ELEMENTS):
            d = digits(idx)
            total = 0
            for s, c in zip(SIGNS, d):
                total += s * (1 if c else 0)  # lift norm is 0 or 1 mod 3
            self.q[idx] = total % 3
        self.pair = [[0] * N_ELEMENTS for _ in range(N_ELEMENTS)]
        for i in range(N_ELEMENTS):
            di = digits(i)
            for j in range(N_ELEMENTS):
                dj = digits(j)
                t = 0
                for s, a, b in zip(SIGNS, di, dj):
                    t += 2 * s * a * b
                self.pair[i][j] = t % 3

    def qbar(self, idx: int) -> Fraction:
        """Value of the finite quadratic form in Q/Z."""
        return Fraction(self.q[idx], 3)

    def bbar(self, i: int, j: int) -> Fraction:
        return Fraction(self.pair[i][j], 3)

    def classes_mod_negation(self) -> list[tuple[int, ...]]:
        """The {x, -x} classes; there are 41 of them."""
        seen = set()
        out = []
        for idx in range(N_ELEMENTS):
            if idx in seen:
                continue
            n = neg_index(idx)
            cls = (idx,) if n == idx else (idx, n)
            seen.update(cls)
            out.append(cls)
        return out

    def count_q_value(self, thirds: int) -> int:
        return sum(1 for v in self.q if v == thirds)

    def support(self) -> list[int]:
        """Classes hit by norm -1/3 dual vectors: Q = -1 mod 3.

        These are exactly the images of the short-mirror vectors.  (The
        published support statement reads "q = 1/3" in the opposite sign
        convention for the induced form; the two conventions give
        complex-conjugate obstruction systems and identical verdicts.)
        """
        return [idx for idx in range(N_ELEMENTS) if self.q[idx] == 2]

    def export_table(self) -> dict:
        return {str(idx): self.q[idx] for idx in range(N_ELEMENTS)}

    def check_quadratic(self) -> bool:
        """qbar(t*x) = t^2 qbar(x) for all t in F_3 and all 81 elements."""
        for idx in range(N_ELEMENTS):
            d = digits(idx)
            for t in range(3):
                scaled = index_of(tuple(t * c for c in d))
                if self.q[scaled] != (t * t * self.q[idx]) % 3:
                    return False
        return True

    def check_polar_identity(self) -> bool:
        for i in range(N_ELEMENTS):
            for j in range(N_ELEMENTS):
                if (self.q[add_index(i, j)] - self.q[i] - self.q[j]) % 3 != self.pair[i][j]:
                    return False
        return True


def _root(power: int) -> CycRat:
    return CYC_W ** (power % 3)


class ObstructionSpace:
    """Solutions C of  C_x = -(1/9) sum_y w^B(x,y) C_y  supported on Q = -1.

    The basis spans the coefficient systems of the vector-valued cusp forms
    C_x * eta^8 that obstruct Borcherds products on this lattice.
    """

    def __init__(self, form: DiscForm):
        self.form = form
        self.support = form.support()
        self.basis = self._solve()

    def _solve(self) -> list[dict[int, CycRat]]:
        sup = self.support
        pos = {idx: k for k, idx in enumerate(sup)}
        n = len(sup)
        rows = []
        for alpha in range(N_ELEMENTS):
            row = [CycRat(0)] * n
            for beta in sup:
                row[pos[beta]] = row[pos[beta]] + _root(self.form.pair[alpha][beta])
            if alpha in pos:
                row[pos[alpha]] = row[pos[alpha]] + CycRat(9)
            if any(row):
                rows.append(row)
        # null space by Gaussian elimination over Q(w)
        pivots = []
        reduced = []
        for row in rows:
            row = row[:]
            for pcol, prow in zip(pivots, reduced):
                if row[pcol]:
                    f = row[pcol]
                    row = [a - f * b for a, b in zip(row, prow)]
            lead = next((k for k, a in enumerate(row) if a), None)
            if lead is None:
                continue
            inv = row[lead].inv()
            row = [a * inv for a in row]
            for prow in reduced:
                if prow[lead]:
                    f = prow[lead]
                    for k in range(n):
                        prow[k] = prow[k] - f * row[k]
            pivots.append(lead)
            reduced.append(row)
        pivot_set = set(pivots)
        free_cols = [k for k in range(n) if k not in pivot_set]
        basis = []
        for fc in free_cols:
            vec = [CycRat(0)] * n
            vec[fc] = CycRat(1)
            for pcol, prow in zip(pivots, reduced):
                vec[pcol] = -prow[fc]
            basis.append({sup[k]: vec[k] for k in range(n) if vec[k]})
        return basis

    def value(self, coeffs: dict[int, CycRat], idx: int) -> CycRat:
        return coeffs.get(idx, CycRat(0))

    def verify_member(self, coeffs: dict[int, CycRat]) -> bool:
        """Re-check support and the eigen-equation on all 81 rows exactly."""
        for idx in coeffs:
            if self.form.q[idx] != 2 and coeffs[idx]:
                return False
        for alpha in range(N_ELEMENTS):
            total = CycRat(0)
            for beta, c in coeffs.items():
                total = total + _root(self.form.pair[alpha][beta]) * c
            lhs = self.value(coeffs, alpha) * 9
            if lhs + total != CycRat(0):
                return False
        return True

    def pair_sum(self, coeffs: dict[int, CycRat], idx: int) -> CycRat:
        """C_x + C_{-x}: the multiplicity pairing of the divisor H(x, -1/3)."""
        return self.value(coeffs, idx) + self.value(coeffs, neg_index(idx))

    def triple_obstructed(self, triple_indices) -> bool:
        """True if some obstruction pairs nontrivially with the triple divisor."""
        for coeffs in self.basis:
            total = CycRat(0)
            for idx in triple_indices:
                total = total + self.pair_sum(coeffs, idx)
            if total:
                return True
        return False

    def single_obstructed(self, idx: int) -> bool:
        return any(self.pair_sum(coeffs, idx) for coeffs in self.basis)
