"""Linear codes over R = F_q[v]/(v^3 - v).

A code is the R-span of a generator list.  Since R is a 3-dimensional
F_q-algebra, the span is also the F_q-span of {g, v*g, v^2*g}, so every code
carries a canonical reduced F_q basis of the flattened coordinates
(a0-block | a1-block | a2-block).  That basis drives size, membership,
equality and chunked codeword enumeration uniformly for every q; the
evaluation/CRT machinery is layered on top and only used where q is odd.

Component codes come in two flavours: the canonical evaluation components
(images of the code under v -> 1, -1, 0) and the literal projections
a, a+b, a+b+c of the printed definition.  Both are kept because the
verification harness measures which one satisfies the published identities.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    CharacteristicTwoUnsupported,
    EmptyCode,
    ParamMismatch,
    SearchSpaceTooLarge,
    ShapeError,
)
from .fieldcode import LinearCodeFq, rref
from .ring import Ring, RingElem
from . import wenum

DEFAULT_BUDGET = 1 << 25
_CHUNK_ROWS = 1 << 14


def _as_index_row(ring: Ring, row) -> tuple[int, ...]:
    out = []
    for x in row:
        if isinstance(x, RingElem):
            ring.check_same(x.ring)
            out.append(x.idx)
        else:
            out.append(int(x) % ring.size)
    return tuple(out)


class LinearCodeR:
    """The R-span of a list of generator vectors (possibly dependent)."""

    def __init__(self, ring: Ring, n: int, gens):
        self.ring = ring
        self.n = n
        rows = [_as_index_row(ring, g) for g in gens]
        for r in rows:
            if len(r) != n:
                raise ShapeError(f"generator length {len(r)} != n = {n}")
        self.gens = tuple(rows)
        self._fq_basis = self._reduce_basis()

    def _fq_generator_rows(self) -> np.ndarray:
        """Flattened F_q generators {g, v*g, v^2*g} for every generator."""
        ring = self.ring
        if not self.gens:
            return np.zeros((0, 3 * self.n), dtype=np.int64)
        garr = np.array(self.gens, dtype=np.int64)
        v_idx = ring.q
        v2_idx = ring.q * ring.q
        stacked = np.concatenate(
            [garr, ring.mul_table[garr, v_idx], ring.mul_table[garr, v2_idx]], axis=0
        )
        coeffs = ring.coeff[stacked]  # (rows, n, 3)
        return coeffs.transpose(0, 2, 1).reshape(stacked.shape[0], 3 * self.n)

    def _reduce_basis(self) -> np.ndarray:
        reduced, rank, _ = rref(self._fq_generator_rows(), self.ring.q)
        return reduced[:rank]

    @classmethod
    def from_rows(cls, ring: Ring, rows) -> "LinearCodeR":
        rows = list(rows)
        if not rows:
            raise ShapeError("cannot infer length from an empty generator list")
        return cls(ring, len(rows[0]), rows)

    @classmethod
    def zero_code(cls, ring: Ring, n: int) -> "LinearCodeR":
        return cls(ring, n, [])

    @classmethod
    def full_space(cls, ring: Ring, n: int) -> "LinearCodeR":
        rows = []
        for i in range(n):
            row = [0] * n
            row[i] = 1
            rows.append(row)
        return cls(ring, n, rows)

    @property
    def dim_fq(self) -> int:
        return self._fq_basis.shape[0]

    @property
    def size(self) -> int:
        return self.ring.q**self.dim_fq

    def __eq__(self, other):
        return (
            isinstance(other, LinearCodeR)
            and self.ring.q == other.ring.q
            and self.n == other.n
            and self._fq_basis.shape == other._fq_basis.shape
            and bool((self._fq_basis == other._fq_basis).all())
        )

    def __hash__(self):
        return hash((self.ring.q, self.n, self._fq_basis.tobytes()))

    def __repr__(self):
        return f"LinearCodeR(q={self.ring.q}, n={self.n}, |C|={self.size})"

    # ---- enumeration ----

    def _unflatten(self, flat: np.ndarray) -> np.ndarray:
        q, n = self.ring.q, self.n
        return flat[:, :n] + q * flat[:, n : 2 * n] + q * q * flat[:, 2 * n :]

    def codeword_chunks(self, budget: int = DEFAULT_BUDGET, chunk_rows: int = _CHUNK_ROWS):
        """Yield (rows, n) arrays of element indices; zero word comes first."""
        q = self.ring.q
        d = self.dim_fq
        if self.size > budget:
            raise SearchSpaceTooLarge(f"{self.size} codewords exceeds budget {budget}")
        basis = self._fq_basis
        for start in range(0, self.size, chunk_rows):
            stop = min(start + chunk_rows, self.size)
            idx = np.arange(start, stop, dtype=np.int64)[:, None]
            powers = q ** np.arange(d - 1, -1, -1, dtype=np.int64)[None, :]
            msgs = (idx // powers) % q
            flat = (msgs @ basis) % q if d else np.zeros((1, 3 * self.n), dtype=np.int64)
            yield self._unflatten(flat)

    def codewords(self, budget: int = DEFAULT_BUDGET) -> np.ndarray:
        """All codewords as element-index rows, sorted lexicographically."""
        rows = np.concatenate(list(self.codeword_chunks(budget)), axis=0)
        order = np.lexsort(rows.T[::-1])
        return rows[order]

    def iter_codewords(self, budget: int = DEFAULT_BUDGET):
        """Stream every codeword exactly once as a tuple of element indices."""
        for rows in self.codeword_chunks(budget):
            for r in rows:
                yield tuple(map(int, r))

    def closure_codewords(self, budget: int = DEFAULT_BUDGET) -> set[tuple[int, ...]]:
        """Span by raw fixpoint closure; the independent oracle for the span."""
        ring = self.ring
        if self.size > budget:
            raise SearchSpaceTooLarge(f"{self.size} codewords exceeds budget {budget}")
        words = {(0,) * self.n}
        for g in self.gens:
            scaled = []
            for r in range(ring.size):
                scaled.append(tuple(int(ring.mul_table[r, gj]) for gj in g))
            words = {
                tuple(int(ring.add_table[wj, sj]) for wj, sj in zip(w, s))
                for w in words
                for s in scaled
            }
        return words

    def contains(self, row) -> bool:
        ring = self.ring
        vec = _as_index_row(ring, row)
        coeffs = ring.coeff[np.array(vec, dtype=np.int64)]
        flat = coeffs.T.reshape(-1) % ring.q
        q = ring.q
        v = flat.astype(np.int64)
        basis = self._fq_basis
        pivots = [int(np.argmax(r != 0)) for r in basis]
        for brow, col in zip(basis, pivots):
            if v[col]:
                v = (v - v[col] * brow) % q
        return not v.any()

    # ---- structure maps ----

    def shifted(self) -> "LinearCodeR":
        """The code's image under one cyclic right shift of coordinates."""
        gens = [tuple(g[-1:] + g[:-1]) for g in self.gens]
        return LinearCodeR(self.ring, self.n, gens)

    def components_crt(self) -> "ComponentTriple":
        """Evaluation components (at v=1, v=-1, v=0); q odd only."""
        ring = self.ring
        if ring.q % 2 == 0:
            raise CharacteristicTwoUnsupported("evaluation components need odd q")
        rows = (
            np.array(self.gens, dtype=np.int64)
            if self.gens
            else np.zeros((0, self.n), dtype=np.int64)
        )
        comps = []
        for t in (1, (ring.q - 1) % ring.q, 0):
            comps.append(LinearCodeFq.from_rows(ring.field, self.n, ring.eval_table[t][rows]))
        return ComponentTriple(comps[0], comps[1], comps[2], "crt")

    def components_paper(self, budget: int = DEFAULT_BUDGET) -> "ComponentTriple":
        """Literal projections a, a+b, a+b+c of the printed definition."""
        ring = self.ring
        fq_rows = self._fq_generator_rows()
        n = self.n
        a = fq_rows[:, :n]
        b = fq_rows[:, n : 2 * n]
        c = fq_rows[:, 2 * n :]
        q = ring.q
        c1 = LinearCodeFq.from_rows(ring.field, n, a % q)
        c2 = LinearCodeFq.from_rows(ring.field, n, (a + b) % q)
        c3 = LinearCodeFq.from_rows(ring.field, n, (a + b + c) % q)
        return ComponentTriple(c1, c2, c3, "paper-literal")

    def gray_image(self) -> LinearCodeFq:
        """The F_q code Psi(C) of length 3n, blocks (a0 | a0+a2 | a1)."""
        ring = self.ring
        fq_rows = self._fq_generator_rows()
        n = self.n
        a0 = fq_rows[:, :n]
        a1 = fq_rows[:, n : 2 * n]
        a2 = fq_rows[:, 2 * n :]
        gray = np.concatenate([a0, (a0 + a2) % ring.q, a1], axis=1)
        return LinearCodeFq.from_rows(ring.field, 3 * n, gray)

    def gray_words(self, rows: np.ndarray) -> np.ndarray:
        """Gray images of element-index rows, as (m, 3n) field arrays."""
        g = self.ring.gray_table[rows]  # (m, n, 3)
        return np.concatenate([g[:, :, 0], g[:, :, 1], g[:, :, 2]], axis=1)

    # ---- duals ----

    def dot(self, x, y) -> int:
        """Ring inner product of two element-index rows."""
        ring = self.ring
        acc = 0
        for xi, yi in zip(x, y):
            acc = int(ring.add_table[acc, ring.mul_table[xi, yi]])
        return acc

    def brute_force_dual(self, budget: int = DEFAULT_BUDGET) -> "LinearCodeR":
        """All of R^n filtered for orthogonality to every generator."""
        ring = self.ring
        ambient = ring.size**self.n
        if ambient > budget:
            raise SearchSpaceTooLarge(f"ambient {ambient} exceeds budget {budget}")
        keep = []
        for rows in LinearCodeR.full_space(ring, self.n).codeword_chunks(budget):
            mask = np.ones(rows.shape[0], dtype=bool)
            for g in self.gens:
                acc = np.zeros(rows.shape[0], dtype=np.int64)
                for j, gj in enumerate(g):
                    acc = ring.add_table[acc, ring.mul_table[rows[:, j], gj]]
                mask &= acc == 0
            keep.append(rows[mask])
        rows = np.concatenate(keep, axis=0)
        return LinearCodeR(ring, self.n, [tuple(map(int, r)) for r in rows])

    def dual(self, budget: int = DEFAULT_BUDGET) -> "LinearCodeR":
        """Dual code: componentwise field duals for odd q, else brute force."""
        ring = self.ring
        if ring.q % 2 == 1:
            comps = self.components_crt()
            dual_triple = ComponentTriple(
                comps.c1.dual(), comps.c2.dual(), comps.c3.dual(), "crt"
            )
            return combine_components(ring, dual_triple, "idempotent")
        return self.brute_force_dual(budget)

    # ---- metrics ----

    def min_lee_distance(
        self, strategy: str = "exhaustive", budget: int = DEFAULT_BUDGET
    ) -> tuple[int, str]:
        """Minimum nonzero Lee weight with the provenance of the number.

        'exhaustive' and 'gray-image' are exact and must agree; the
        'component-lemma' value min{d(C_i)} is a published formula under
        test and is returned tagged, never silently substituted.
        """
        ring = self.ring
        if strategy == "exhaustive":
            if self.dim_fq == 0:
                raise EmptyCode("zero code has no nonzero Lee weight")
            best = 3 * self.n + 1
            for rows in self.codeword_chunks(budget):
                w = ring.lee_table[rows].sum(axis=1)
                nz = w[w > 0]
                if nz.size:
                    best = min(best, int(nz.min()))
                    if best == 1:
                        break
            return best, "exhaustive"
        if strategy == "gray-image":
            return self.gray_image().min_distance(budget), "gray-image"
        if strategy == "component-lemma":
            comps = self.components_crt()
            dists = [c.min_distance(budget) for c in comps if c.k > 0]
            if not dists:
                raise EmptyCode("all components are zero codes")
            return min(dists), "lemma5-based"
        raise ValueError(f"unknown strategy {strategy!r}")

    def classify_duality(self, budget: int = DEFAULT_BUDGET) -> "DualityFlags":
        dual = self.dual(budget)
        self_orth = all(self.dot(g, h) == 0 for g in self.gens for h in self.gens)
        self_dual = self_orth and self == dual
        fsd = wenum.lee_enumerator(self, budget) == wenum.lee_enumerator(dual, budget)
        return DualityFlags(self_orth, self_dual, fsd)


@dataclass
class DualityFlags:
    self_orthogonal: bool
    self_dual: bool
    formally_self_dual: bool


@dataclass
class ComponentTriple:
    """F_q component codes of an R-code, with their provenance.

    For 'crt' the slots are the evaluation images at v = 1, -1, 0 in that
    order, recombined by the idempotents e1 = (v+v^2)/2, e2 = (v^2-v)/2,
    e0 = 1-v^2.
    """

    c1: LinearCodeFq
    c2: LinearCodeFq
    c3: LinearCodeFq
    provenance: str

    def __iter__(self):
        return iter((self.c1, self.c2, self.c3))

    @property
    def dims(self) -> tuple[int, int, int]:
        return (self.c1.k, self.c2.k, self.c3.k)

    def size_product(self) -> int:
        return self.c1.size * self.c2.size * self.c3.size


def combine_components(ring: Ring, triple: ComponentTriple, mode: str) -> LinearCodeR:
    """Rebuild an R-code from field components.

    'idempotent' uses e1*C1 + e2*C2 + e0*C3 (q odd), the genuine direct-sum
    decomposition.  'paper-literal' spans v*C1, (1-v)*C2, (1-v^2)*C3 as
    printed; those coefficients are not orthogonal idempotents, so this mode
    exists to measure how far the printed identities drift.
    """
    n = triple.c1.n
    if triple.c2.n != n or triple.c3.n != n:
        raise ParamMismatch("components must share the length n")
    gens = []
    if mode == "idempotent":
        if ring.q % 2 == 0:
            raise CharacteristicTwoUnsupported("idempotent combination needs odd q")
        slots = (
            (triple.c1, lambda u: ring.crt_table[u % ring.q, 0, 0]),
            (triple.c2, lambda u: ring.crt_table[0, u % ring.q, 0]),
            (triple.c3, lambda u: ring.crt_table[0, 0, u % ring.q]),
        )
        for code, embed in slots:
            for row in code.gen:
                gens.append(tuple(int(embed(int(u))) for u in row))
    elif mode == "paper-literal":
        q = ring.q
        coeff_maps = (
            (triple.c1, lambda u: ring.index(0, u, 0)),          # u * v
            (triple.c2, lambda u: ring.index(u, (-u) % q, 0)),   # u * (1-v)
            (triple.c3, lambda u: ring.index(u, 0, (-u) % q)),   # u * (1-v^2)
        )
        for code, embed in coeff_maps:
            for row in code.gen:
                gens.append(tuple(int(embed(int(u))) for u in row))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return LinearCodeR(ring, n, gens)


def code_from_generators(ring: Ring, rows, n: int | None = None) -> LinearCodeR:
    rows = list(rows)
    if n is None:
        if not rows:
            raise ShapeError("length n required for an empty generator list")
        n = len(rows[0])
    return LinearCodeR(ring, n, rows)


def random_code_r(ring: Ring, n: int, rng, max_rows: int | None = None) -> LinearCodeR:
    """Seeded random R-code used by the verification suites."""
    rows = rng.randrange(1, (max_rows or n) + 1)
    gens = [[rng.randrange(ring.size) for _ in range(n)] for _ in range(rows)]
    return LinearCodeR(ring, n, gens)
