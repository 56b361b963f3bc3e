"""Exact scalar arithmetic and sparse monoidal linear algebra.

Everything downstream (bialgebra axioms, actions, split extensions) is
phrased as equalities of linear maps between tensor words of based
spaces.  This module supplies those maps: exact scalars over the
rationals or a prime field, tensor-word spaces with a fixed row-major
index convention, sparse linear maps with composition / Kronecker
product / symmetry, and canonical subspaces (equalizers, quotients,
spans) computed by fraction-free-exact reduced row echelon form.

Index convention, fixed once and for all: the basis vector (i, j) of
V (x) W has flat index i * dim(W) + j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence


class CoreError(Exception):
    """Base class for errors raised by the linear-algebra substrate."""


class ShapeError(CoreError):
    """Domains/codomains do not line up."""


class FieldMismatchError(CoreError):
    """Two values from different ground fields met in one computation."""


class SingularMapError(CoreError):
    """A map that had to be invertible is not; carries the achieved rank."""

    def __init__(self, message: str, rank: int, size: int):
        super().__init__(f"{message} (rank {rank} of {size})")
        self.rank = rank
        self.size = size


# ---------------------------------------------------------------------------
# ground fields


class Field:
    """Exact ground field.  Scalars are plain values (Fraction or int)."""

    kind: str

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def fmt(self, a) -> str:
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)


class RationalField(Field):
    """The rationals; scalars are Fractions kept in lowest terms."""

    kind = "Q"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, n: int):
        return Fraction(n)

    def parse(self, text: str):
        return Fraction(text.strip())

    def fmt(self, a) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField(Field):
    """GF(p); scalars are ints reduced to [0, p)."""

    kind = "Fp"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise CoreError(f"modulus {p} is not prime")
        self.p = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def from_int(self, n: int):
        return n % self.p

    def parse(self, text: str):
        return int(text.strip()) % self.p

    def fmt(self, a) -> str:
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"Fp({self.p})"


def parse_field(text: str) -> Field:
    """Parse a field designator: ``Q`` or ``Fp:<p>``."""
    text = text.strip()
    if text == "Q":
        return RationalField()
    if text.startswith("Fp:"):
        return PrimeField(int(text[3:]))
    raise CoreError(f"unknown field designator {text!r} (expected Q or Fp:<p>)")


# ---------------------------------------------------------------------------
# spaces


@dataclass(frozen=True)
class BaseSpace:
    """A named based vector space with labelled basis."""

    name: str
    dim: int
    labels: tuple[str, ...]

    def __post_init__(self):
        # dim 0 is allowed only so that zero subspaces and full quotients
        # have a domain; algebra objects always have dim >= 1.
        if self.dim < 0:
            raise ShapeError(f"base space {self.name!r} must have dim >= 0")
        if len(self.labels) != self.dim:
            raise ShapeError(f"base space {self.name!r}: {len(self.labels)} labels for dim {self.dim}")


def base_space(name: str, labels: Sequence[str]) -> BaseSpace:
    return BaseSpace(name, len(labels), tuple(labels))


@dataclass(frozen=True)
class Space:
    """A tensor word of base spaces.  The empty word is the unit object."""

    factors: tuple[BaseSpace, ...] = ()

    @cached_property
    def dim(self) -> int:
        n = 1
        for f in self.factors:
            n *= f.dim
        return n

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(f.dim for f in self.factors)

    def tensor(self, *others: "Space") -> "Space":
        factors = self.factors
        for o in others:
            factors = factors + o.factors
        return Space(factors)

    def split_index(self, i: int) -> tuple[int, ...]:
        """Flat index -> multi-index, row-major."""
        if not self.factors:
            return ()
        out = []
        for f in reversed(self.factors):
            out.append(i % f.dim)
            i //= f.dim
        return tuple(reversed(out))

    def flat_index(self, multi: Sequence[int]) -> int:
        i = 0
        for f, k in zip(self.factors, multi):
            i = i * f.dim + k
        return i

    def label(self, i: int) -> str:
        if not self.factors:
            return "1"
        parts = [f.labels[k] for f, k in zip(self.factors, self.split_index(i))]
        return "⊗".join(parts)

    def __repr__(self):
        if not self.factors:
            return "I"
        return "⊗".join(f"{f.name}[{f.dim}]" for f in self.factors)


UNIT_SPACE = Space(())


# ---------------------------------------------------------------------------
# linear maps


def _check_same_field(a: Field, b: Field):
    if a != b:
        raise FieldMismatchError(f"mixed ground fields {a!r} and {b!r}")


@dataclass(frozen=True)
class LinMap:
    """A sparse linear map between tensor words.

    ``entries`` maps (row, col) to a nonzero scalar; rows index the
    codomain, columns the domain.
    """

    domain: Space
    codomain: Space
    field: Field
    entries: dict

    def __post_init__(self):
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.codomain.dim and 0 <= c < self.domain.dim):
                raise ShapeError(f"entry ({r},{c}) outside {self.codomain.dim}x{self.domain.dim}")
            if self.field.is_zero(v):
                raise ShapeError(f"stored zero at ({r},{c})")

    @cached_property
    def _by_col(self) -> dict:
        cols: dict[int, list] = {}
        for (r, c), v in self.entries.items():
            cols.setdefault(c, []).append((r, v))
        return cols

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def from_entries(domain: Space, codomain: Space, field: Field, items: Iterable) -> "LinMap":
        entries = {}
        for r, c, v in items:
            if not field.is_zero(v):
                entries[(r, c)] = v
        return LinMap(domain, codomain, field, entries)

    @staticmethod
    def from_rows(domain: Space, codomain: Space, field: Field, rows: Sequence[Sequence]) -> "LinMap":
        entries = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if not field.is_zero(v):
                    entries[(r, c)] = v
        return LinMap(domain, codomain, field, entries)

    @staticmethod
    def identity(space: Space, field: Field) -> "LinMap":
        one = field.one
        return LinMap(space, space, field, {(i, i): one for i in range(space.dim)})

    @staticmethod
    def zero(domain: Space, codomain: Space, field: Field) -> "LinMap":
        return LinMap(domain, codomain, field, {})

    # -- structure -----------------------------------------------------------

    def to_rows(self) -> list[list]:
        zero = self.field.zero
        rows = [[zero] * self.domain.dim for _ in range(self.codomain.dim)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def column(self, c: int) -> dict:
        return {r: v for r, v in self._by_col.get(c, ())}

    def cast(self, domain: Space | None = None, codomain: Space | None = None) -> "LinMap":
        """Reinterpret the tensor-word shape without touching entries."""
        domain = domain if domain is not None else self.domain
        codomain = codomain if codomain is not None else self.codomain
        if domain.dim != self.domain.dim or codomain.dim != self.codomain.dim:
            raise ShapeError(
                f"cannot cast {self.codomain.dim}x{self.domain.dim} map to {codomain.dim}x{domain.dim}"
            )
        return LinMap(domain, codomain, self.field, self.entries)

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.domain.dim == other.domain.dim
            and self.codomain.dim == other.codomain.dim
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.domain.dim, self.codomain.dim, tuple(sorted(self.entries.items()))))

    def add(self, other: "LinMap") -> "LinMap":
        self._require_same_shape(other)
        F = self.field
        entries = dict(self.entries)
        for k, v in other.entries.items():
            s = F.add(entries.get(k, F.zero), v)
            if F.is_zero(s):
                entries.pop(k, None)
            else:
                entries[k] = s
        return LinMap(self.domain, self.codomain, F, entries)

    def sub(self, other: "LinMap") -> "LinMap":
        self._require_same_shape(other)
        F = self.field
        entries = dict(self.entries)
        for k, v in other.entries.items():
            s = F.sub(entries.get(k, F.zero), v)
            if F.is_zero(s):
                entries.pop(k, None)
            else:
                entries[k] = s
        return LinMap(self.domain, self.codomain, F, entries)

    def scale(self, a) -> "LinMap":
        F = self.field
        if F.is_zero(a):
            return LinMap.zero(self.domain, self.codomain, F)
        return LinMap(self.domain, self.codomain, F, {k: F.mul(a, v) for k, v in self.entries.items()})

    def _require_same_shape(self, other: "LinMap"):
        _check_same_field(self.field, other.field)
        if self.domain.dim != other.domain.dim or self.codomain.dim != other.codomain.dim:
            raise ShapeError(
                f"shape mismatch: {self.codomain.dim}x{self.domain.dim} vs "
                f"{other.codomain.dim}x{other.domain.dim}"
            )

    def apply(self, vec: dict) -> dict:
        """Apply to a sparse column vector {index: scalar}."""
        F = self.field
        out: dict[int, object] = {}
        for c, a in vec.items():
            for r, v in self._by_col.get(c, ()):
                s = F.add(out.get(r, F.zero), F.mul(v, a))
                if F.is_zero(s):
                    out.pop(r, None)
                else:
                    out[r] = s
        return out


def compose(g: LinMap, f: LinMap, reshape: bool = False) -> LinMap:
    """g after f.  Factor shapes must agree unless ``reshape`` is set."""
    _check_same_field(g.field, f.field)
    if f.codomain.dim != g.domain.dim:
        raise ShapeError(
            f"cannot compose: codomain {f.codomain!r} (dim {f.codomain.dim}) vs "
            f"domain {g.domain!r} (dim {g.domain.dim})"
        )
    if not reshape and f.codomain.dims != g.domain.dims:
        raise ShapeError(
            f"factor shapes differ: {f.codomain!r} vs {g.domain!r}; pass reshape=True to allow"
        )
    F = g.field
    out: dict[tuple[int, int], object] = {}
    gcols = g._by_col
    for (rf, cf), vf in f.entries.items():
        for rg, vg in gcols.get(rf, ()):
            key = (rg, cf)
            s = F.add(out.get(key, F.zero), F.mul(vg, vf))
            if F.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
    return LinMap(f.domain, g.codomain, F, out)


def compose_all(*maps: LinMap) -> LinMap:
    """Compose a pipeline in application order: maps[0] is applied first,
    so compose_all(f, g, h) = h . g . f."""
    out = maps[0]
    for m in maps[1:]:
        out = compose(m, out)
    return out


def tensor(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product, row-major: (i, j) of V (x) W sits at i*dim(W)+j."""
    _check_same_field(f.field, g.field)
    F = f.field
    gr = g.codomain.dim
    gc = g.domain.dim
    out = {}
    for (rf, cf), vf in f.entries.items():
        base_r = rf * gr
        base_c = cf * gc
        for (rg, cg), vg in g.entries.items():
            out[(base_r + rg, base_c + cg)] = F.mul(vf, vg)
    return LinMap(f.domain.tensor(g.domain), f.codomain.tensor(g.codomain), F, out)


def tensor_all(*maps: LinMap) -> LinMap:
    out = maps[0]
    for m in maps[1:]:
        out = tensor(out, m)
    return out


def symmetry(x: Space, y: Space, field: Field) -> LinMap:
    """The braiding X (x) Y -> Y (x) X sending (i, j) to (j, i)."""
    one = field.one
    nx, ny = x.dim, y.dim
    entries = {}
    for i in range(nx):
        for j in range(ny):
            entries[(j * nx + i, i * ny + j)] = one
    return LinMap(x.tensor(y), y.tensor(x), field, entries)


def first_difference(f: LinMap, g: LinMap):
    """First (row, col, left, right) where the two maps differ, or None.

    Positions are ordered row-major (row, then column).
    """
    f._require_same_shape(g)
    F = f.field
    keys = set(f.entries) | set(g.entries)
    best = None
    for k in keys:
        a = f.entries.get(k, F.zero)
        b = g.entries.get(k, F.zero)
        if a != b:
            if best is None or k < best:
                best = k
    if best is None:
        return None
    return (best[0], best[1], f.entries.get(best, F.zero), g.entries.get(best, F.zero))


# ---------------------------------------------------------------------------
# dense echelon machinery (exact, deterministic)


def rref(rows: list[list], field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns).

    Pivot choice is the first row with a nonzero entry in column order,
    which makes every echelon form (and hence every canonical subspace
    basis) deterministic.
    """
    F = field
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = None
        for i in range(r, nrows):
            if not F.is_zero(rows[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = F.inv(rows[r][c])
        if inv != F.one:
            rows[r] = [F.mul(inv, v) for v in rows[r]]
        for i in range(nrows):
            if i != r and not F.is_zero(rows[i][c]):
                factor = rows[i][c]
                rows[i] = [F.sub(a, F.mul(factor, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def nullspace(rows: list[list], field: Field) -> list[list]:
    """Basis of the right nullspace of the given matrix (dense rows)."""
    F = field
    ncols = len(rows[0]) if rows else 0
    work = [list(row) for row in rows]
    work, pivots = rref(work, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [F.zero] * ncols
        vec[fc] = F.one
        for r, pc in enumerate(pivots):
            v = work[r][fc]
            if not F.is_zero(v):
                vec[pc] = F.neg(v)
        basis.append(vec)
    return basis


def rank_of(f: LinMap) -> int:
    rows = f.to_rows()
    if not rows or not rows[0]:
        return 0
    _, pivots = rref(rows, f.field)
    return len(pivots)


def invert(f: LinMap) -> LinMap:
    """Exact inverse of a square map via Gauss-Jordan elimination."""
    n = f.domain.dim
    if f.codomain.dim != n:
        raise ShapeError(f"cannot invert a {f.codomain.dim}x{n} map")
    F = f.field
    rows = f.to_rows()
    aug = [rows[i] + [F.one if j == i else F.zero for j in range(n)] for i, row in enumerate(rows)]
    aug, pivots = rref(aug, F)
    if pivots[:n] != list(range(n)):
        rank = sum(1 for p in pivots if p < n)
        raise SingularMapError("map is singular", rank, n)
    inv_rows = [row[n:] for row in aug]
    return LinMap.from_rows(f.codomain, f.domain, F, inv_rows)


# ---------------------------------------------------------------------------
# canonical subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of an ambient tensor word, in canonical echelon form.

    The basis map sends a fresh k-dimensional space into the ambient;
    its columns are in reduced column echelon form with strictly
    increasing pivot rows, so two subspaces are equal iff their basis
    maps agree entrywise.
    """

    ambient: Space
    basis: LinMap
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.basis.domain.dim

    @property
    def field(self) -> Field:
        return self.basis.field

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient.dim == other.ambient.dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient.dim, self.basis))

    def contains_vector(self, vec: Sequence) -> bool:
        F = self.field
        residual = list(vec)
        cols = self.basis._by_col
        for j, p in enumerate(self.pivots):
            coeff = residual[p]
            if F.is_zero(coeff):
                continue
            for r, v in cols.get(j, ()):
                residual[r] = F.sub(residual[r], F.mul(coeff, v))
        return all(F.is_zero(v) for v in residual)

    def contains(self, other: "Subspace") -> bool:
        cols = other.basis.to_rows()
        n = other.ambient.dim
        for j in range(other.dim):
            if not self.contains_vector([cols[r][j] for r in range(n)]):
                return False
        return True

    def coefficients_of(self, vec: Sequence):
        """Express a vector in the canonical basis; None if outside."""
        F = self.field
        residual = list(vec)
        coeffs = []
        cols = self.basis._by_col
        for j, p in enumerate(self.pivots):
            coeff = residual[p]
            coeffs.append(coeff)
            if F.is_zero(coeff):
                continue
            for r, v in cols.get(j, ()):
                residual[r] = F.sub(residual[r], F.mul(coeff, v))
        if any(not F.is_zero(v) for v in residual):
            return None
        return coeffs


def _sub_domain(k: int) -> Space:
    return Space((BaseSpace("sub", k, tuple(f"v{i}" for i in range(k))),))


def span(ambient: Space, vectors: Iterable[Sequence], field: Field) -> Subspace:
    """Canonical subspace spanned by the given dense vectors."""
    rows = [list(v) for v in vectors]
    n = ambient.dim
    if not rows:
        return Subspace(ambient, LinMap.zero(_sub_domain(0), ambient, field), ())
    rows, pivots = rref(rows, field)
    k = len(pivots)
    dom = _sub_domain(k)
    entries = {}
    for j in range(k):
        for r in range(n):
            v = rows[j][r]
            if not field.is_zero(v):
                entries[(r, j)] = v
    return Subspace(ambient, LinMap(dom, ambient, field, entries), tuple(pivots))


def column_span(f: LinMap) -> Subspace:
    """Canonical image of a map (span of its columns)."""
    n = f.codomain.dim
    F = f.field
    vecs = []
    for c in range(f.domain.dim):
        col = [F.zero] * n
        for r, v in f._by_col.get(c, ()):
            col[r] = v
        vecs.append(col)
    return span(f.codomain, vecs, F)


def kernel_subspace(f: LinMap) -> Subspace:
    """Canonical nullspace of a plain linear map."""
    F = f.field
    rows = f.to_rows()
    if not rows:
        return span(f.domain, [[F.one if i == j else F.zero for j in range(f.domain.dim)] for i in range(f.domain.dim)], F)
    basis = nullspace(rows, F)
    return span(f.domain, basis, F)


def equalizer(f: LinMap, g: LinMap) -> Subspace:
    """Canonical equalizer subspace {v : f(v) = g(v)}."""
    f._require_same_shape(g)
    return kernel_subspace(f.sub(g))


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Canonical intersection of two subspaces of the same ambient."""
    if u.ambient.dim != v.ambient.dim:
        raise ShapeError("subspaces live in different ambients")
    F = u.field
    n = u.ambient.dim
    ku, kv = u.dim, v.dim
    if ku == 0 or kv == 0:
        return span(u.ambient, [], F)
    urows = u.basis.to_rows()
    vrows = v.basis.to_rows()
    stacked = [[urows[r][j] for j in range(ku)] + [vrows[r][j] for j in range(kv)] for r in range(n)]
    vecs = []
    for sol in nullspace(stacked, F):
        vec = [F.zero] * n
        for j in range(ku):
            if not F.is_zero(sol[j]):
                for r in range(n):
                    vec[r] = F.add(vec[r], F.mul(sol[j], urows[r][j]))
        vecs.append(vec)
    return span(u.ambient, vecs, F)


def quotient(u: Subspace) -> tuple[Space, LinMap]:
    """Quotient of the ambient by a subspace; representatives are the
    non-pivot coordinates.  Returns (quotient space, projection)."""
    F = u.field
    n = u.ambient.dim
    pivots = list(u.pivots)
    pivot_set = set(pivots)
    rest = [j for j in range(n) if j not in pivot_set]
    labels = tuple(u.ambient.label(j) for j in rest)
    qspace = Space((BaseSpace("quot", len(rest), labels),))
    basis_rows = u.basis.to_rows()
    entries = {}
    for out_i, j in enumerate(rest):
        entries[(out_i, j)] = F.one
        for col_i, p in enumerate(pivots):
            v = basis_rows[j][col_i]
            if not F.is_zero(v):
                entries[(out_i, p)] = F.neg(v)
    proj = LinMap(u.ambient, qspace, F, entries)
    return qspace, proj


def solve_factor(through: LinMap, target: LinMap) -> LinMap:
    """Solve ``through . h = target`` for h, where ``through`` has full
    column rank.  Raises SingularMapError when no exact factorization
    exists."""
    _check_same_field(through.field, target.field)
    if through.codomain.dim != target.codomain.dim:
        raise ShapeError("factorization target lives in a different ambient")
    F = through.field
    n = through.codomain.dim
    k = through.domain.dim
    m = target.domain.dim
    aug = through.to_rows()
    trows = target.to_rows()
    for r in range(n):
        aug[r] = aug[r] + trows[r]
    aug, pivots = rref(aug, F)
    lead = [p for p in pivots if p < k]
    if len(lead) != k:
        raise SingularMapError("factor map does not have full column rank", len(lead), k)
    if any(p >= k for p in pivots):
        raise SingularMapError("target is not in the column span of the factor map", k, k)
    entries = {}
    for r in range(k):
        for c in range(m):
            v = aug[r][k + c]
            if not F.is_zero(v):
                entries[(r, c)] = v
    return LinMap(target.domain, through.domain, F, entries)
