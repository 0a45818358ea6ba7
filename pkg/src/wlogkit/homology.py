"""Exact integer linear algebra and the homology checks built on it.

Matrices are plain lists of rows of Python ints (arbitrary precision).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotInCommutatorSubgroup
from .graphs import FlagSkeleton, SimplicialGraph, Triangle, bfs_tree
from .words import Alphabet, Word, abelianize, exterior_image

IntMatrix = list  # list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    bt = list(zip(*b)) if b else [()] * cols
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a: IntMatrix, ncols: int | None = None) -> IntMatrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(r) for r in zip(*a)]


@dataclass
class SmithForm:
    """U * A * V = D with U, V unimodular and D diagonal (d_1 | d_2 | ...)."""

    factors: list[int]  # nonzero diagonal entries, all positive
    rows: int
    cols: int
    U: IntMatrix = field(repr=False)
    V: IntMatrix = field(repr=False)
    D: IntMatrix = field(repr=False)
    # integer inverses of U and V, kept only on request; U Uinv = I certifies unimodularity
    Uinv: IntMatrix | None = field(default=None, repr=False)
    Vinv: IntMatrix | None = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return len(self.factors)


def _nearest_quotient(x: int, p: int) -> int:
    # symmetric remainder keeps intermediate entries smaller than floor division
    q, r = divmod(x, p)
    return q + 1 if 2 * abs(r) > abs(p) else q


def smith_normal_form(a: IntMatrix, ncols: int | None = None, with_inverses: bool = False) -> SmithForm:
    """Smith normal form with transforms.

    Pivot rule: smallest nonzero absolute value in the active block, ties
    broken by (row, column). ``with_inverses`` also accumulates U^-1 and V^-1.
    """
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    D = [list(map(int, row)) for row in a]
    if any(len(r) != n for r in D):
        raise ValueError("ragged matrix")
    U = identity(m)
    V = identity(n)
    Ui = identity(m) if with_inverses else None
    Vi = identity(n) if with_inverses else None

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        if Ui is not None:
            for row in Ui:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        if Vi is not None:
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q:
            rd, rs = D[dst], D[src]
            for k in range(n):
                if rs[k]:
                    rd[k] += q * rs[k]
            ud, us = U[dst], U[src]
            for k in range(m):
                if us[k]:
                    ud[k] += q * us[k]
            if Ui is not None:
                # inverse of a row operation is the opposite column operation
                for row in Ui:
                    if row[dst]:
                        row[src] -= q * row[dst]

    def add_col(dst, src, q):
        if q:
            for row in D:
                if row[src]:
                    row[dst] += q * row[src]
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]
            if Vi is not None:
                vd, vs = Vi[dst], Vi[src]
                for k in range(n):
                    if vd[k]:
                        vs[k] -= q * vd[k]

    factors = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -_nearest_quotient(D[i][t], p))
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -_nearest_quotient(D[t][j], p))
                    if D[t][j]:
                        clean = False
            if not clean:
                # a remainder smaller than the pivot survived; re-pivot on it
                best = None
                for i in range(t, m):
                    x = D[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, t)
                for j in range(t, n):
                    x = D[t][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), t, j)
                _, i, j = best
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
            if Ui is not None:
                for row in Ui:
                    row[t] = -row[t]
        factors.append(D[t][t])
        t += 1
    return SmithForm(factors, m, n, U, V, D, Ui, Vi)


def integer_rank(a: IntMatrix, ncols: int | None = None) -> int:
    return smith_normal_form(a, ncols).rank


@dataclass(frozen=True)
class AbelianGroupDescriptor:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_free(self) -> bool:
        return not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def cokernel(rows: IntMatrix, ncols: int) -> AbelianGroupDescriptor:
    """Z^ncols modulo the row span of ``rows``."""
    snf = smith_normal_form(rows, ncols)
    return AbelianGroupDescriptor(ncols - snf.rank, tuple(d for d in snf.factors if d > 1))


def solve_in_row_span(target: Sequence[int], rows: IntMatrix) -> list[int] | None:
    """Integer coefficients c with sum c_k rows[k] = target, or None."""
    n = len(target)
    if not rows:
        return [] if not any(target) else None
    # solve rows^T c = target via SNF of rows^T: U A V = D
    a = transpose(rows)
    snf = smith_normal_form(a, len(rows))
    ub = [sum(u * b for u, b in zip(urow, target)) for urow in snf.U]
    y = [0] * len(rows)
    for i in range(n):
        if i < snf.rank:
            d = snf.factors[i]
            if ub[i] % d:
                return None
            y[i] = ub[i] // d
        elif ub[i]:
            return None
    return [sum(v * yy for v, yy in zip(vrow, y)) for vrow in snf.V]


def in_row_span(target: Sequence[int], rows: IntMatrix) -> bool:
    return solve_in_row_span(target, rows) is not None


# --- presentations ---------------------------------------------------------


def relator_matrix(relators: Sequence[Word], alphabet: Alphabet) -> IntMatrix:
    return [list(abelianize(r, alphabet)) for r in relators]


def presentation_complex_homology(generators: Alphabet, relators: Sequence[Word]):
    """(H_1, rank H_2) of the presentation 2-complex.

    ``generators`` may also be a Presentation.
    """
    if hasattr(generators, "relators"):
        generators, relators = generators.generators, generators.relators
    d2 = relator_matrix(relators, generators)
    snf = smith_normal_form(d2, len(generators))
    h1 = AbelianGroupDescriptor(
        len(generators) - snf.rank, tuple(d for d in snf.factors if d > 1)
    )
    return h1, len(relators) - snf.rank


def exterior_matrix(relators: Sequence[Word], alphabet: Alphabet) -> IntMatrix:
    return [exterior_image(r, alphabet).vector() for r in relators]


def exterior_rank(relators: Sequence[Word], alphabet: Alphabet) -> int:
    """Rank of the relators' span in Lambda^2; every relator must be zero-sum."""
    for r in relators:
        if any(abelianize(r, alphabet)):
            raise NotInCommutatorSubgroup(f"relator {r} is not in the commutator subgroup (not applicable)")
    npairs = len(alphabet) * (len(alphabet) - 1) // 2
    return integer_rank(exterior_matrix(relators, alphabet), npairs)


def relative_exterior_rank(relators: Sequence[Word], alphabet: Alphabet) -> int:
    """Lower bound for rank H_2 that also works for mixed relators.

    Takes the zero-sum combinations of relators, maps their products into
    Lambda^2 and measures the rank modulo the span of e_i ^ ab(r); that
    quotient is an image of the Hopf group, so its rank bounds rank H_2.
    Coincides with ``exterior_rank`` when every relator is zero-sum.
    """
    n = len(alphabet)
    npairs = n * (n - 1) // 2
    ab = relator_matrix(relators, alphabet)
    combos = integer_kernel(ab, n)
    images = []
    for c in combos:
        letters = []
        for r, k in zip(relators, c):
            w = r if k > 0 else r.inverse()
            letters.extend(w.letters * abs(k))
        images.append(exterior_image(Word(letters), alphabet).vector())
    pairs = {}
    for i in range(n):
        for j in range(i + 1, n):
            pairs[(i, j)] = len(pairs)
    boundary = []
    for vec in ab:
        if not any(vec):
            continue
        for i in range(n):
            row = [0] * npairs
            for j, x in enumerate(vec):
                if x and i != j:
                    # e_i ^ e_j with sign for j < i
                    key = (i, j) if i < j else (j, i)
                    row[pairs[key]] += x if i < j else -x
            if any(row):
                boundary.append(row)
    return integer_rank(images + boundary, npairs) - integer_rank(boundary, npairs)


def integer_kernel(a: IntMatrix, ncols: int) -> list[list[int]]:
    """A Z-basis of {c : c^T a = 0}, i.e. integer left-kernel of ``a``."""
    m = len(a)
    if m == 0:
        return []
    # left kernel of a = right kernel of a^T; from SNF of a: U a V = D, rows of U past rank
    snf = smith_normal_form(a, ncols)
    return [list(snf.U[i]) for i in range(snf.rank, m)]


@dataclass(frozen=True)
class SuspensionReport:
    expected_h1_rank: int
    expected_h2_rank: int
    h1: AbelianGroupDescriptor
    h2_rank: int

    @property
    def passed(self) -> bool:
        return (
            self.h1.free_rank == self.expected_h1_rank
            and self.h1.is_free()
            and self.h2_rank == self.expected_h2_rank
        )

    def to_json(self) -> dict:
        return {
            "expected": {"h1": f"Z^{self.expected_h1_rank}", "h2_rank": self.expected_h2_rank},
            "observed": {"h1": str(self.h1), "h2_rank": self.h2_rank},
            "pass": self.passed,
        }


def suspension_check(w) -> SuspensionReport:
    """Compare the WLOG 2-complex homology against the suspension of (graph + point)."""
    from .wlog import components_and_forest, presentation

    c = len(components_and_forest(w).components)
    p = presentation(w)
    h1, h2 = presentation_complex_homology(p.generators, p.relators)
    return SuspensionReport(c, len(w.edges) - len(w.vertices) + c, h1, h2)


# --- flag complex ----------------------------------------------------------


def boundary_matrices(sk: FlagSkeleton) -> tuple[IntMatrix, IntMatrix]:
    """d1 (edges x vertices) and d2 (triangles x edges), one row per cell."""
    vindex = {v: i for i, v in enumerate(sk.vertices)}
    eindex = {e: i for i, e in enumerate(sk.edges)}
    d1 = []
    for u, v in sk.edges:
        row = [0] * len(sk.vertices)
        row[vindex[u]] -= 1
        row[vindex[v]] += 1
        d1.append(row)
    d2 = []
    for t in sk.triangles:
        row = [0] * len(sk.edges)
        row[eindex[(t.b, t.c)]] += 1
        row[eindex[(t.a, t.c)]] -= 1
        row[eindex[(t.a, t.b)]] += 1
        d2.append(row)
    return d1, d2


def flag_h1(sk: FlagSkeleton) -> AbelianGroupDescriptor:
    d1, d2 = boundary_matrices(sk)
    r1 = integer_rank(d1, len(sk.vertices))
    s2 = smith_normal_form(d2, len(sk.edges))
    return AbelianGroupDescriptor(
        len(sk.edges) - r1 - s2.rank, tuple(d for d in s2.factors if d > 1)
    )


def flag_boundary_rank(sk: FlagSkeleton) -> int:
    """Rank of d2 on the flag 2-skeleton."""
    _, d2 = boundary_matrices(sk)
    return integer_rank(d2, len(sk.edges))


def _tietze_trivial(relators: list[list[tuple[str, int]]], gens: set[str], budget: int) -> bool:
    rels = [Word(r).cyclically_reduced() for r in relators]
    steps = 0
    while gens:
        rels = [r for r in rels if r]
        best = None
        for idx, r in enumerate(rels):
            counts = {}
            for s, _ in r.letters:
                counts[s] = counts.get(s, 0) + 1
            for s in sorted(counts):
                if counts[s] == 1 and (best is None or len(r) < best[0]):
                    best = (len(r), idx, s)
        if best is None:
            return False
        _, idx, s = best
        r = rels.pop(idx)
        # rotate so s leads: r = s^e * rest, hence s = rest^(-e)
        k = next(i for i, (x, _) in enumerate(r.letters) if x == s)
        rot = r.letters[k:] + r.letters[:k]
        e = rot[0][1]
        rest = Word(rot[1:])
        value = rest.inverse() if e > 0 else rest
        rels = [x.substitute({s: value}).cyclically_reduced() for x in rels]
        gens.discard(s)
        steps += 1 + sum(len(x) for x in rels)
        if steps > budget:
            return False
    return True


def pi1_trivial_certificate(sk: FlagSkeleton, budget: int = 10_000) -> str:
    """'certified' if bounded Tietze elimination trivializes pi_1, else 'unknown'.

    Only valid Tietze moves are used, so 'certified' is sound.
    """
    g = SimplicialGraph(sk.vertices, frozenset(sk.edges))
    if not g.vertices or not g.is_connected():
        return "unknown"
    tree = set(bfs_tree(g))
    # index-based names: joining vertex names could collide
    name = {e: f"x{i}" for i, e in enumerate(sk.edges) if e not in tree}
    relators = []
    for t in sk.triangles:
        loop = [((t.a, t.b), 1), ((t.b, t.c), 1), ((t.a, t.c), -1)]
        relators.append([(name[e], s) for e, s in loop if e in name])
    return "certified" if _tietze_trivial(relators, set(name.values()), budget) else "unknown"
