"""Characters of symmetric groups, exactly.

Irreducible characters chi^lambda are computed by the Murnaghan-Nakayama rule
in beta-number form and collected into cached integer tables.  On top of the
tables: class functions with rational-function values, induction from Young
subgroups, the standard inner product, graded multiplicity (Molien) series,
and the degree-zero Frobenius characteristic into the Schur basis.

Conventions: chi^{(n)} is trivial and chi^{(1,...,1)} is the sign character.
Classes are labelled by cycle type; both axes of a table run in the canonical
partition order, so the dimension column is the last one, at class (1,...,1).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .partition import Partition, partitions
from .qcoeff import QPoly, QRat

__all__ = [
    "CharTable",
    "ClassFunction",
    "GradedCharacter",
    "char_table",
    "chi",
    "irreducible",
    "restrict",
    "restrict_class_function",
    "induce_product",
    "inner",
    "molien_mult",
    "frobenius0",
]


@functools.lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama recursion on (shape, cycle type)."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    length = len(lam)
    betas = sorted(lam[i] + length - 1 - i for i in range(length))
    bset = set(betas)
    total = 0
    for b in betas:
        if b >= r and (b - r) not in bset:
            height = sum(1 for x in betas if b - r < x < b)
            nb = sorted(bset - {b} | {b - r}, reverse=True)
            new_lam = tuple(
                p for p in (nb[j] - (length - 1 - j) for j in range(length)) if p > 0
            )
            total += (-1) ** height * _mn(new_lam, rest)
    return total


def chi(lam: Partition, mu: Partition) -> int:
    """chi^lambda evaluated at cycle type mu (|lam| = |mu|)."""
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    return _mn(lam.parts, mu.parts)


@dataclass(frozen=True)
class CharTable:
    """Integer character table of S_n with canonically ordered rows and columns."""

    n: int
    labels: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def index(self, lam: Partition) -> int:
        return self._index[lam]

    @functools.cached_property
    def _index(self) -> dict[Partition, int]:
        return {lam: i for i, lam in enumerate(self.labels)}

    def chi(self, lam: Partition, mu: Partition) -> int:
        return self.values[self.index(lam)][self.index(mu)]

    def dim(self, lam: Partition) -> int:
        return self.values[self.index(lam)][-1]


@functools.lru_cache(maxsize=None)
def char_table(n: int) -> CharTable:
    labels = partitions(n)
    values = tuple(
        tuple(_mn(lam.parts, mu.parts) for mu in labels) for lam in labels
    )
    return CharTable(n, labels, values)


@dataclass(frozen=True)
class ClassFunction:
    """A class function on S_n with values in Q(q), stored per cycle type."""

    n: int
    values: dict[Partition, QRat]

    def __post_init__(self) -> None:
        for mu in self.values:
            if mu.size != self.n:
                raise ValueError(f"cycle type {mu} is not a partition of {self.n}")

    def __call__(self, mu: Partition) -> QRat:
        if mu.size != self.n:
            raise ValueError(f"cycle type {mu} is not a partition of {self.n}")
        return self.values.get(mu, QRat.zero())

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise ValueError("class functions on different groups")
        vals = dict(self.values)
        for mu, v in other.values.items():
            vals[mu] = vals.get(mu, QRat.zero()) + v
        return ClassFunction(self.n, {m: v for m, v in vals.items() if not v.is_zero()})

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            if self.n != other.n:
                raise ValueError("class functions on different groups")
            vals = {}
            for mu, v in self.values.items():
                w = other.values.get(mu)
                if w is not None and not (p := v * w).is_zero():
                    vals[mu] = p
            return ClassFunction(self.n, vals)
        scale = other if isinstance(other, QRat) else QRat.from_fraction(other)
        return ClassFunction(
            self.n, {m: v * scale for m, v in self.values.items() if not (v * scale).is_zero()}
        )

    __rmul__ = __mul__


def irreducible(lam: Partition) -> ClassFunction:
    """chi^lambda as a ClassFunction."""
    table = char_table(lam.size)
    row = table.values[table.index(lam)]
    return ClassFunction(
        lam.size,
        {mu: QRat.from_int(v) for mu, v in zip(table.labels, row) if v},
    )


@dataclass(frozen=True)
class GradedCharacter:
    """A q-graded sum of irreducibles: mult maps lambda to its multiplicity series."""

    n: int
    mult: dict[Partition, QRat]

    def __post_init__(self) -> None:
        for mu in self.mult:
            if mu.size != self.n:
                raise ValueError(f"label {mu} is not a partition of {self.n}")

    def get(self, mu: Partition) -> QRat:
        if mu.size != self.n:
            raise ValueError(f"label {mu} is not a partition of {self.n}")
        return self.mult.get(mu, QRat.zero())

    def trimmed(self) -> "GradedCharacter":
        return GradedCharacter(self.n, {m: v for m, v in self.mult.items() if not v.is_zero()})

    def to_class_function(self) -> ClassFunction:
        table = char_table(self.n)
        vals: dict[Partition, QRat] = {}
        for lam, c in self.mult.items():
            row = table.values[table.index(lam)]
            for mu, v in zip(table.labels, row):
                if v:
                    vals[mu] = vals.get(mu, QRat.zero()) + c * v
        return ClassFunction(self.n, {m: v for m, v in vals.items() if not v.is_zero()})

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mult": [
                {"partition": mu.to_json(), "coeff": c.to_json()}
                for mu, c in sorted(self.trimmed().mult.items(), key=lambda kv: kv[0].sort_key())
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "GradedCharacter":
        return GradedCharacter(
            int(obj["n"]),
            {
                Partition.from_json(t["partition"]): QRat.from_json(t["coeff"])
                for t in obj["mult"]
            },
        )


def restrict(lam: Partition) -> list[Partition]:
    """Branching to S_{n-1}: the shapes obtained by removing one corner box."""
    return [lam.remove_box(j) for j in lam.removable_rows()]


def restrict_class_function(f: ClassFunction) -> ClassFunction:
    """Restriction of f to S_{n-1}, evaluated via cycle types.

    A permutation of cycle type nu in S_{n-1} sits in S_n with type nu + (1).
    """
    if f.n == 0:
        raise ValueError("cannot restrict below S_0")
    vals: dict[Partition, QRat] = {}
    for nu in partitions(f.n - 1):
        up = Partition(tuple(sorted(nu.parts + (1,), reverse=True)))
        v = f(up)
        if not v.is_zero():
            vals[nu] = v
    return ClassFunction(f.n - 1, vals)


def restrict_graded(gc: GradedCharacter) -> GradedCharacter:
    """Branch each irreducible constituent of gc down one level."""
    vals: dict[Partition, QRat] = {}
    for lam, c in gc.mult.items():
        for nu in restrict(lam):
            vals[nu] = vals.get(nu, QRat.zero()) + c
    return GradedCharacter(gc.n - 1, {m: v for m, v in vals.items() if not v.is_zero()})


def _sub_multisets(mu: Partition, r: int):
    """Splittings of the multiset of parts of mu into (alpha, beta), |alpha| = r.

    Yields (alpha, beta) as Partitions, each unordered splitting once.
    """
    items = sorted(mu.multiplicities().items())

    def rec(i: int, need: int, chosen: list[int]):
        if need == 0:
            alpha = tuple(sorted(chosen, reverse=True))
            rest: list[int] = []
            cnt = dict(items)
            for a in chosen:
                cnt[a] -= 1
            for v, m in cnt.items():
                rest.extend([v] * m)
            yield alpha, tuple(sorted(rest, reverse=True))
            return
        if i == len(items) or need < 0:
            return
        v, m = items[i]
        for k in range(0, min(m, need // v) + 1):
            yield from rec(i + 1, need - k * v, chosen + [v] * k)

    for alpha, beta in rec(0, r, []):
        yield Partition(alpha), Partition(beta)


def induce_product(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """Induction of the outer product f x g from S_r x S_{n-r} up to S_n.

    Ind(f x g)(nu) = sum over splittings nu = alpha u beta with |alpha| = r of
    z_nu / (z_alpha z_beta) * f(alpha) g(beta).
    """
    n = f.n + g.n
    vals: dict[Partition, QRat] = {}
    for nu in partitions(n):
        acc = QRat.zero()
        znu = nu.z_stat()
        for alpha, beta in _sub_multisets(nu, f.n):
            fa = f(alpha)
            if fa.is_zero():
                continue
            gb = g(beta)
            if gb.is_zero():
                continue
            w = Fraction(znu, alpha.z_stat() * beta.z_stat())
            acc = acc + fa * gb * w
        if not acc.is_zero():
            vals[nu] = acc
    return ClassFunction(n, vals)


def inner(f: ClassFunction, g: ClassFunction) -> QRat:
    """(1/n!) sum over classes |class| f g = sum over mu f(mu) g(mu) / z_mu."""
    if f.n != g.n:
        raise ValueError("class functions on different groups")
    acc = QRat.zero()
    for mu, v in f.values.items():
        w = g.values.get(mu)
        if w is not None:
            acc = acc + v * w * Fraction(1, mu.z_stat())
    return acc


def molien_mult(lam: Partition, mu: Partition) -> QRat:
    """Graded multiplicity of chi^mu in C[x_1..x_n] tensor chi^lambda.

    sum over nu of chi^mu(nu) chi^lambda(nu) / (z_nu prod_i (1 - q^{nu_i})).
    """
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    table = char_table(lam.size)
    acc = QRat.zero()
    for nu in table.labels:
        c = table.chi(mu, nu) * table.chi(lam, nu)
        if not c:
            continue
        den = QPoly.const(nu.z_stat())
        for p in nu.parts:
            den = den * (QPoly.one() - QPoly.monomial(p))
        acc = acc + QRat(QPoly.const(c), den)
    return acc


def decompose(f: ClassFunction) -> GradedCharacter:
    """Multiplicities <f, chi^lambda> of each irreducible in f."""
    table = char_table(f.n)
    mult: dict[Partition, QRat] = {}
    for lam in table.labels:
        c = inner(f, irreducible(lam))
        if not c.is_zero():
            mult[lam] = c
    return GradedCharacter(f.n, mult)


def frobenius0(f: ClassFunction):
    """Frobenius characteristic: sum over lambda of <f, chi^lambda> s_lambda."""
    from . import symfunc

    gc = decompose(f)
    return symfunc.SymFunc("s", dict(gc.mult))
