"""Functions from a mixed-radix domain into Z_q.

Three representations cooperate here:

* ``QaryFunction`` -- a plain length-L value table over Z_q.  This is the
  ground truth everything else is checked against.
* ``MonomialForm`` -- a linear combination of monomials x^e with exponent
  vectors e drawn from the domain.  A monomial only carries factors for the
  strictly positive exponents, so the all-zero exponent vector is the constant
  monomial 1.  (``power_zero_convention`` documents the 0^0 = 0 convention for
  explicit powers; it never arises in monomial evaluation because zero
  exponents contribute no factor.)
* ``GeneralizedQuadraticSpec`` -- the structured family of functions whose
  restrictions are chains of products of univariate maps plus per-variable
  terms, per-block coupling terms, and per-restriction offsets.  Univariate
  component maps are stored as explicit length-q tables so that exhaustive
  checks at small q stay possible.

Restrictions pin a subset J of variables to digits c; the surviving points
N_c partition the domain as c ranges over all digit choices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

import numpy as np

from .mixed_radix import DomainSpec, digit_matrix, int_to_vec, vec_to_int


class SpecError(ValueError):
    """A structured-function description violates its invariants."""


# ---------------------------------------------------------------------------
# univariate tables

def identity_table(q: int) -> tuple[int, ...]:
    return tuple(range(q))


def constant_table(q: int, value: int = 0) -> tuple[int, ...]:
    return (value % q,) * q


def check_table(t, q: int) -> tuple[int, ...]:
    t = tuple(int(v) for v in t)
    if len(t) != q:
        raise SpecError(f"table length {len(t)} != modulus {q}")
    if any(not 0 <= v < q for v in t):
        raise SpecError(f"table entries must lie in [0, {q})")
    return t


def power_zero_convention(base: int, exp: int, q: int) -> int:
    """base**exp mod q with the convention 0**0 = 0 (and x**0 = 1 for x != 0).

    Note the convention makes x**0 a non-constant map.  Monomial evaluation
    never calls this with exp == 0: zero exponents contribute no factor, so
    the empty monomial is the constant 1 (required by the worked examples).
    """
    if exp == 0:
        return 0 if base == 0 else 1
    return pow(base, exp, q)


def is_permutation_mod(t, p: int) -> bool:
    """True iff u -> t(u) mod p restricted to u in {0..p-1} is a bijection of {0..p-1}.

    p must divide the table modulus q = len(t).  For uniform-modulus
    constructions call with p = q, which is the plain permutation test.
    """
    q = len(t)
    if p < 1 or q % p != 0:
        raise ValueError(f"p={p} does not divide q={q}")
    return {t[u] % p for u in range(p)} == set(range(p))


# ---------------------------------------------------------------------------
# monomial forms

def monomials_upto(d: DomainSpec, r: int) -> list[tuple[int, ...]]:
    """All exponent vectors over the domain with Hamming weight <= r.

    Ordered by weight, then by support positions, then by digit values.
    """
    if r > d.m:
        r = d.m
    radix = d.radix_per_position
    out: list[tuple[int, ...]] = []
    for w in range(r + 1):
        for positions in itertools.combinations(range(d.m), w):
            ranges = [range(1, radix[j]) for j in positions]
            for digits in itertools.product(*ranges):
                e = [0] * d.m
                for j, val in zip(positions, digits):
                    e[j] = val
                out.append(tuple(e))
    return out


@dataclass(frozen=True)
class MonomialForm:
    """Z_q-linear combination of monomials; coeffs maps exponent vector -> coefficient."""

    domain: DomainSpec
    coeffs: dict

    def __post_init__(self):
        radix = self.domain.radix_per_position
        clean = {}
        for e, c in self.coeffs.items():
            e = tuple(int(v) for v in e)
            if len(e) != self.domain.m:
                raise SpecError(f"exponent vector {e} has wrong length")
            if any(not 0 <= ej < pj for ej, pj in zip(e, radix)):
                raise SpecError(f"exponent vector {e} violates digit bounds")
            c = int(c) % self.domain.q
            if c:
                clean[e] = c
        object.__setattr__(self, "coeffs", clean)

    def hamming_degree(self) -> int:
        """Max Hamming weight over nonzero coefficients; 0 for the zero form."""
        if not self.coeffs:
            return 0
        return max(sum(1 for v in e if v) for e in self.coeffs)

    def evaluate(self, x) -> int:
        digits = int_to_vec(x, self.domain) if isinstance(x, (int, np.integer)) else tuple(x)
        q = self.domain.q
        total = 0
        for e, c in self.coeffs.items():
            term = c
            for xj, ej in zip(digits, e):
                if ej:
                    term = term * pow(int(xj), ej, q) % q
            total += term
        return total % q

    def table(self) -> np.ndarray:
        digits = digit_matrix(self.domain)
        q = self.domain.q
        acc = np.zeros(self.domain.L, dtype=np.int64)
        for e, c in self.coeffs.items():
            term = np.full(self.domain.L, c, dtype=np.int64)
            for j, ej in enumerate(e):
                if ej:
                    term = term * np.power(digits[:, j], ej) % q
            acc = (acc + term) % q
        return acc

    def to_function(self) -> "QaryFunction":
        return QaryFunction(self.domain, self.table(), provenance=self)


def hamming_degree(mf: MonomialForm) -> int:
    return mf.hamming_degree()


# ---------------------------------------------------------------------------
# value tables

@dataclass(frozen=True)
class QaryFunction:
    """A function domain -> Z_q held as an explicit value table."""

    domain: DomainSpec
    table: np.ndarray
    provenance: object = None

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.shape != (self.domain.L,):
            raise SpecError(f"table shape {t.shape} != (L,) = ({self.domain.L},)")
        if t.min(initial=0) < 0 or t.max(initial=0) >= self.domain.q:
            raise SpecError(f"table values must lie in [0, {self.domain.q})")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @property
    def q(self) -> int:
        return self.domain.q

    def __call__(self, x) -> int:
        if isinstance(x, (int, np.integer)):
            if not 0 <= x < self.domain.L:
                raise ValueError(f"point {x} out of range [0, {self.domain.L})")
            return int(self.table[x])
        return int(self.table[vec_to_int(x, self.domain)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QaryFunction)
            and self.domain == other.domain
            and bool(np.array_equal(self.table, other.table))
        )


def zero_function(d: DomainSpec) -> QaryFunction:
    return QaryFunction(d, np.zeros(d.L, dtype=np.int64))


# ---------------------------------------------------------------------------
# restrictions

def restriction_index(d: DomainSpec, J, c) -> int:
    """Canonical integer labelling the restriction digits c on positions J.

    Per block, the digits of c at that block's J-positions are read least
    significant first; block 1 contributes the fastest-varying part.
    """
    J = tuple(J)
    c = tuple(int(v) for v in c)
    if len(J) != len(c):
        raise ValueError("J and c must have equal length")
    idx = 0
    stride = 1
    for i, (p, _) in enumerate(d.blocks):
        members = [(j, cj) for j, cj in zip(J, c) if d.block_of_position(j) == i]
        local = 0
        for t, (j, cj) in enumerate(members):
            if not 0 <= cj < p:
                raise ValueError(f"restriction digit {cj} at position {j} violates bound {p}")
            local += cj * p**t
        idx += local * stride
        stride *= p ** len(members)
    return idx


def restriction_values(d: DomainSpec, J) -> list[tuple[int, ...]]:
    """All digit tuples c for positions J, ordered by restriction_index."""
    J = tuple(J)
    radix = d.radix_per_position
    per_block: list[list[int]] = [[] for _ in d.blocks]
    for pos_in_J, j in enumerate(J):
        per_block[d.block_of_position(j)].append(pos_in_J)
    order: list[int] = []
    for members in per_block:
        order.extend(members)
    out = []
    ranges = [range(radix[J[pos]]) for pos in order]
    for combo in itertools.product(*reversed(ranges)):
        combo = tuple(reversed(combo))
        c = [0] * len(J)
        for pos, val in zip(order, combo):
            c[pos] = val
        out.append(tuple(c))
    return out


@dataclass(frozen=True)
class RestrictedFunction:
    """View of f on N_c = {x : digits of x at J equal c}; undefined elsewhere."""

    base: QaryFunction
    J: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        d = self.base.domain
        object.__setattr__(self, "J", tuple(int(j) for j in self.J))
        object.__setattr__(self, "c", tuple(int(v) for v in self.c))
        if len(self.J) != len(set(self.J)):
            raise SpecError(f"duplicate positions in J={self.J}")
        if len(self.J) != len(self.c):
            raise SpecError("J and c must have equal length")
        radix = d.radix_per_position
        for j, cj in zip(self.J, self.c):
            if not 0 <= j < d.m:
                raise SpecError(f"position {j} out of range")
            if not 0 <= cj < radix[j]:
                raise SpecError(f"restriction digit {cj} violates bound {radix[j]} at position {j}")

    @property
    def support(self) -> np.ndarray:
        d = self.base.domain
        digits = digit_matrix(d)
        mask = np.ones(d.L, dtype=bool)
        for j, cj in zip(self.J, self.c):
            mask &= digits[:, j] == cj
        return np.flatnonzero(mask)

    def __call__(self, x) -> int:
        d = self.base.domain
        idx = x if isinstance(x, (int, np.integer)) else vec_to_int(x, d)
        digits = int_to_vec(int(idx), d)
        if any(digits[j] != cj for j, cj in zip(self.J, self.c)):
            raise ValueError(f"point {idx} is outside the restriction support")
        return int(self.base.table[idx])


def restrict(f: QaryFunction, J, c) -> RestrictedFunction:
    """The view of f on the points whose digits at positions J equal c."""
    return RestrictedFunction(f, tuple(J), tuple(c))


# ---------------------------------------------------------------------------
# structured (generalized quadratic) functions

def _per_restriction(value, idx: int):
    """Fetch a per-restriction entry: dicts are keyed by restriction_index."""
    if isinstance(value, dict):
        return value[idx]
    return value


@dataclass(frozen=True)
class GeneralizedQuadraticSpec:
    """Structured description of a function whose restrictions are quadratic chains.

    Per block i (with digit bound p_i and m_i positions):

    * ``J[i]``       -- restricted flat positions inside the block, n_i <= m_i - 1;
    * ``pis[i]``     -- ordering of the m_i - n_i unrestricted positions used by the
                        chain; either one shared tuple or a dict restriction -> tuple;
    * ``chains[i]``  -- m_i - n_i - 1 pairs (f, f') of length-q tables; the product
                        term f(x_a) f'(x_b) enters with weight q / p_i;
    * ``gs[i]``      -- m_i - n_i length-q tables applied to the ordered positions,
                        shared or per restriction.

    ``couplings`` holds k - 1 triples (lam, f, h): lam * f(last position of block i)
    * h(first position of block i+1).  ``offsets`` maps restriction index -> Z_q
    constant (missing entries are 0).  ``corrupted`` marks a spec whose chain
    tables intentionally fail the permutation requirement; constructors only
    accept such specs through the corruption API.
    """

    domain: DomainSpec
    J: tuple
    pis: tuple
    chains: tuple
    gs: tuple
    couplings: tuple = ()
    offsets: dict | None = None
    corrupted: bool = False
    corruption_note: str = ""

    def __post_init__(self):
        d = self.domain
        q = d.q
        if len(self.J) != d.k or len(self.pis) != d.k or len(self.chains) != d.k or len(self.gs) != d.k:
            raise SpecError("J, pis, chains, gs must each have one entry per block")
        J = tuple(tuple(int(j) for j in Ji) for Ji in self.J)
        object.__setattr__(self, "J", J)
        for i, Ji in enumerate(J):
            positions = set(d.block_positions(i))
            if len(set(Ji)) != len(Ji) or not set(Ji) <= positions:
                raise SpecError(f"J[{i}]={Ji} must be distinct positions of block {i}")
            if len(Ji) > d.blocks[i][1] - 1:
                raise SpecError(f"|J[{i}]| = {len(Ji)} exceeds m_{i} - 1 = {d.blocks[i][1] - 1}")
        pis = []
        for i, entry in enumerate(self.pis):
            free = set(d.block_positions(i)) - set(J[i])
            if isinstance(entry, dict):
                checked = {int(cidx): self._check_pi(entry[cidx], free, i) for cidx in entry}
                pis.append(checked)
            else:
                pis.append(self._check_pi(entry, free, i))
        object.__setattr__(self, "pis", tuple(pis))
        chains = []
        for i, pairs in enumerate(self.chains):
            want = d.blocks[i][1] - len(J[i]) - 1
            pairs = tuple((check_table(f, q), check_table(fp, q)) for f, fp in pairs)
            if len(pairs) != want:
                raise SpecError(f"block {i} needs {want} chain pairs, got {len(pairs)}")
            chains.append(pairs)
        object.__setattr__(self, "chains", tuple(chains))
        gs = []
        for i, entry in enumerate(self.gs):
            want = d.blocks[i][1] - len(J[i])
            if isinstance(entry, dict):
                entry = {int(cidx): self._check_gs(entry[cidx], want, q, i) for cidx in entry}
            else:
                entry = self._check_gs(entry, want, q, i)
            gs.append(entry)
        object.__setattr__(self, "gs", tuple(gs))
        couplings = tuple(
            (int(lam) % q, check_table(f, q), check_table(h, q)) for lam, f, h in self.couplings
        )
        if len(couplings) != d.k - 1:
            raise SpecError(f"need {d.k - 1} coupling triples, got {len(couplings)}")
        object.__setattr__(self, "couplings", couplings)
        offsets = {int(k): int(v) % q for k, v in (self.offsets or {}).items()}
        object.__setattr__(self, "offsets", offsets)
        # per-restriction dicts must cover every restriction class
        classes = range(self.restriction_count())
        for name, per_block in (("pis", self.pis), ("gs", self.gs)):
            for i, entry in enumerate(per_block):
                if isinstance(entry, dict) and not set(entry) >= set(classes):
                    missing = sorted(set(classes) - set(entry))
                    raise SpecError(f"{name}[{i}] misses restriction classes {missing}")
        if not set(offsets) <= set(classes):
            raise SpecError("offsets carry unknown restriction classes")

    @staticmethod
    def _check_pi(pi, free: set, block: int) -> tuple[int, ...]:
        pi = tuple(int(j) for j in pi)
        if set(pi) != free or len(pi) != len(free):
            raise SpecError(
                f"pi for block {block} must order the unrestricted positions {sorted(free)}, got {pi}"
            )
        return pi

    @staticmethod
    def _check_gs(tables, want: int, q: int, block: int):
        tables = tuple(check_table(t, q) for t in tables)
        if len(tables) != want:
            raise SpecError(f"block {block} needs {want} per-variable tables, got {len(tables)}")
        return tables

    @property
    def n(self) -> tuple[int, ...]:
        return tuple(len(Ji) for Ji in self.J)

    @property
    def flat_J(self) -> tuple[int, ...]:
        return tuple(j for Ji in self.J for j in Ji)

    def restriction_count(self) -> int:
        return prod(p**ni for (p, _), ni in zip(self.domain.blocks, self.n))

    def pi_for(self, block: int, cidx: int) -> tuple[int, ...]:
        return _per_restriction(self.pis[block], cidx)

    def gs_for(self, block: int, cidx: int):
        return _per_restriction(self.gs[block], cidx)

    def offset_for(self, cidx: int) -> int:
        return self.offsets.get(cidx, 0)

    def chain_weight(self, block: int) -> int:
        return self.domain.q // self.domain.blocks[block][0]

    def validate_chains(self):
        """Raise unless every chain table permutes {0..p_i-1} mod p_i."""
        for i, pairs in enumerate(self.chains):
            p = self.domain.blocks[i][0]
            for j, (f, fp) in enumerate(pairs):
                if not is_permutation_mod(f, p):
                    raise SpecError(
                        f"chain table f[{i}][{j + 1}] does not permute Z_{p} under mod {p}"
                    )
                if not is_permutation_mod(fp, p):
                    raise SpecError(
                        f"chain table f'[{i}][{j + 1}] does not permute Z_{p} under mod {p}"
                    )


def build_from_spec(s: GeneralizedQuadraticSpec) -> QaryFunction:
    """Materialize the value table of the structured function.

    On each restriction class N_c the value is

        sum_i [ (q/p_i) * sum_j f_{i,j}(x_{pi_i(j)}) f'_{i,j}(x_{pi_i(j+1)})
                + sum_j' g_{i,j'}(x_{pi_i(j')}) ]
        + sum_{i'} lam_{i'} * f_{i'}(x at last chain slot of block i')
                            * h_{i'}(x at first chain slot of block i'+1)
        + offset(c),  all mod q.
    """
    d = s.domain
    q = d.q
    digits = digit_matrix(d)
    table = np.zeros(d.L, dtype=np.int64)
    flat_J = s.flat_J
    for c in restriction_values(d, flat_J):
        cidx = restriction_index(d, flat_J, c)
        mask = np.ones(d.L, dtype=bool)
        for j, cj in zip(flat_J, c):
            mask &= digits[:, j] == cj
        sel = digits[mask]
        acc = np.full(sel.shape[0], s.offset_for(cidx), dtype=np.int64)
        pis = [s.pi_for(i, cidx) for i in range(d.k)]
        for i in range(d.k):
            w = s.chain_weight(i)
            pi = pis[i]
            for j, (f, fp) in enumerate(s.chains[i]):
                fa = np.asarray(f, dtype=np.int64)[sel[:, pi[j]]]
                fb = np.asarray(fp, dtype=np.int64)[sel[:, pi[j + 1]]]
                acc = (acc + w * fa * fb) % q
            for j, g in enumerate(s.gs_for(i, cidx)):
                acc = (acc + np.asarray(g, dtype=np.int64)[sel[:, pi[j]]]) % q
        for i, (lam, f, h) in enumerate(s.couplings):
            if lam:
                fa = np.asarray(f, dtype=np.int64)[sel[:, pis[i][-1]]]
                hb = np.asarray(h, dtype=np.int64)[sel[:, pis[i + 1][0]]]
                acc = (acc + lam * fa * hb) % q
        table[mask] = acc
    return QaryFunction(d, table, provenance=s)
