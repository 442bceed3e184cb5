"""Normal forms in free nilpotent groups F_n / Gamma^(c+1).

Elements are written as ``b_1^e_1 ... b_k^e_k`` over a Hall basis of basic
commutators ordered by weight.  Commutators use ``[x, y] = x^-1 y^-1 x y``
and a basic commutator is written ``[u, v]`` with ``u`` earlier than ``v``.

Two independent routes compute the exponent vector:

* :func:`collect` runs collection from the left against a polycyclic
  presentation whose conjugation relations are derived once, lazily;
* :func:`magnus_normal_form` peels the truncated Magnus expansion weight
  by weight.  Magnus' theorem (dimension subgroups of a free group are its
  lower central terms) makes this exact.

The relations used by the collector come from the Magnus route, but the
collector itself only ever manipulates exponent vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import GeneratorIndexOutOfRange, SizeGuardExceeded
from .words import Word

MAX_RANK = 5
MAX_CLASS = 4

Series = dict  # monomial tuple -> int, constant term under ()


@dataclass(frozen=True)
class BasicCommutator:
    index: int
    weight: int
    left: int | None = None
    right: int | None = None
    generator: int | None = None


def witt_number(n: int, w: int) -> int:
    """Number of basic commutators of weight ``w`` on ``n`` generators."""
    total = 0
    for d in range(1, w + 1):
        if w % d == 0:
            total += _mobius(d) * n ** (w // d)
    return total // w


def _mobius(d: int) -> int:
    result, p = 1, 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1
    return -result if d > 1 else result


@dataclass(frozen=True, eq=False)
class HallBasis:
    rank: int
    nilpotency_class: int
    elements: tuple[BasicCommutator, ...]
    _conj_cache: dict = field(default_factory=dict, repr=False)
    _series_cache: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.elements)

    def weight(self, i: int) -> int:
        return self.elements[i].weight

    def indices_of_weight(self, w: int) -> list[int]:
        return [b.index for b in self.elements if b.weight == w]

    def label(self, i: int) -> str:
        b = self.elements[i]
        if b.generator is not None:
            return f"a{b.generator + 1}"
        return f"[{self.label(b.left)},{self.label(b.right)}]"

    def element_word(self, i: int) -> Word:
        """The basic commutator as a word in the free generators."""
        b = self.elements[i]
        if b.generator is not None:
            return Word.gen(b.generator)
        x, y = self.element_word(b.left), self.element_word(b.right)
        return x.inverse() * y.inverse() * x * y

    def normal_form_word(self, exponents: Sequence[int]) -> Word:
        out = Word()
        for i, e in enumerate(exponents):
            if e:
                out = out * self.element_word(i) ** e
        return out

    # collector support ---------------------------------------------------

    def conjugate(self, j: int, i: int, sign: int) -> tuple[tuple[int, int], ...]:
        """Normal form of ``b_i^-sign b_j b_i^sign`` for ``i < j`` as syllables."""
        key = (j, i, sign)
        hit = self._conj_cache.get(key)
        if hit is None:
            if self.weight(i) + self.weight(j) > self.nilpotency_class:
                hit = ((j, 1),)
            else:
                deg = self.nilpotency_class
                bi = _basis_series(self, i, sign)
                series = _s_mul(_s_mul(_basis_series(self, i, -sign), _basis_series(self, j, 1), deg), bi, deg)
                exps = magnus_normal_form(series, self)
                hit = tuple((k, e) for k, e in enumerate(exps) if e)
            self._conj_cache[key] = hit
        return hit

    def commutes(self, j: int, i: int) -> bool:
        return self.weight(i) + self.weight(j) > self.nilpotency_class


@lru_cache(maxsize=None)
def hall_basis(n: int, c: int) -> HallBasis:
    if n < 1 or c < 1:
        raise ValueError("rank and class must be positive")
    if n > MAX_RANK or c > MAX_CLASS:
        raise SizeGuardExceeded(f"Hall basis guard: rank <= {MAX_RANK}, class <= {MAX_CLASS} (got {n}, {c})")
    elems = [BasicCommutator(i, 1, generator=i) for i in range(n)]
    for w in range(2, c + 1):
        fresh = []
        for u in elems:
            for v in elems:
                if u.index >= v.index or u.weight + v.weight != w:
                    continue
                # mirrored Hall condition: if v = [v1, v2] then u >= v1
                if v.left is not None and u.index < v.left:
                    continue
                fresh.append((u.index, v.index))
        for u, v in sorted(fresh):
            elems.append(BasicCommutator(len(elems), w, left=u, right=v))
    return HallBasis(n, c, tuple(elems))


# ---------------------------------------------------------------- collection

def collect(word: Word, basis: HallBasis) -> tuple[int, ...]:
    """Exponent vector of ``word`` in F_n / Gamma^(c+1)."""
    if word.max_generator() >= basis.rank:
        raise GeneratorIndexOutOfRange(f"word uses generator {word.max_generator()} but rank is {basis.rank}")
    return collect_syllables(word.letters, basis)


def collect_syllables(syllables, basis: HallBasis, start=None) -> tuple[int, ...]:
    """Right-multiply ``start`` (default identity) by basis syllables ``(index, exp)``."""
    k = len(basis)
    exps = list(start) if start is not None else [0] * k
    stack = list(reversed(syllables))
    while stack:
        g, e = stack.pop()
        if e == 0:
            continue
        tail = [h for h in range(g + 1, k) if exps[h] and not basis.commutes(h, g)]
        if not tail:
            exps[g] += e
            continue
        s = 1 if e > 0 else -1
        if e != s:
            stack.append((g, e - s))
        moved = [(h, exps[h]) for h in range(g + 1, k) if exps[h]]
        for h, _ in moved:
            exps[h] = 0
        exps[g] += s
        # tail^(b_g^s) = prod_h (b_h^(b_g^s))^(e_h), processed in ascending h
        pending = []
        for h, eh in moved:
            conj = basis.conjugate(h, g, s)
            if eh < 0:
                conj = tuple((x, -y) for x, y in reversed(conj))
            if len(conj) == 1:
                pending.append((conj[0][0], conj[0][1] * abs(eh)))
            else:
                pending.extend(conj * abs(eh))
        stack.extend(reversed(pending))
    return tuple(exps)


def nf_multiply(x: Sequence[int], y: Sequence[int], basis: HallBasis) -> tuple[int, ...]:
    syllables = [(i, e) for i, e in enumerate(y) if e]
    return collect_syllables(syllables, basis, start=x)


def nf_inverse(x: Sequence[int], basis: HallBasis) -> tuple[int, ...]:
    syllables = [(i, -e) for i, e in reversed(list(enumerate(x))) if e]
    return collect_syllables(syllables, basis)


# ---------------------------------------------------------------- Magnus route

def _s_mul(a: Series, b: Series, deg: int) -> Series:
    out: Series = {}
    for ka, va in a.items():
        room = deg - len(ka)
        for kb, vb in b.items():
            if len(kb) <= room:
                k = ka + kb
                out[k] = out.get(k, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def _s_inv(a: Series, deg: int) -> Series:
    neg = {k: -v for k, v in a.items() if k}
    result: Series = {(): 1}
    term: Series = {(): 1}
    for _ in range(deg):
        term = _s_mul(term, neg, deg)
        if not term:
            break
        for k, v in term.items():
            result[k] = result.get(k, 0) + v
    return {k: v for k, v in result.items() if v}


def _binom(e: int, k: int) -> int:
    num, den = 1, 1
    for t in range(k):
        num *= e - t
        den *= t + 1
    return num // den


def magnus(word: Word, rank: int, deg: int) -> Series:
    """Magnus expansion a_i -> 1 + X_i truncated above total degree ``deg``."""
    if word.max_generator() >= rank:
        raise GeneratorIndexOutOfRange(f"word uses generator {word.max_generator()} but rank is {rank}")
    acc: Series = {(): 1}
    for g, e in word.letters:
        factor = {(g,) * k: _binom(e, k) for k in range(deg + 1) if _binom(e, k)}
        acc = _s_mul(acc, factor, deg)
    return acc


def _s_pow(a: Series, e: int, deg: int) -> Series:
    if e < 0:
        a, e = _s_inv(a, deg), -e
    out: Series = {(): 1}
    while e:
        if e & 1:
            out = _s_mul(out, a, deg)
        e >>= 1
        if e:
            a = _s_mul(a, a, deg)
    return out


def _basis_series(basis: HallBasis, i: int, sign: int) -> Series:
    """Cached Magnus series of ``b_i`` (sign 1) or its inverse (sign -1)."""
    key = (i, sign)
    hit = basis._series_cache.get(key)
    if hit is None:
        b, deg = basis.elements[i], basis.nilpotency_class
        if sign < 0:
            hit = _s_inv(_basis_series(basis, i, 1), deg)
        elif b.generator is not None:
            hit = {(): 1, (b.generator,): 1}
        else:
            u, v = b.left, b.right
            hit = _s_mul(
                _s_mul(_basis_series(basis, u, -1), _basis_series(basis, v, -1), deg),
                _s_mul(_basis_series(basis, u, 1), _basis_series(basis, v, 1), deg),
                deg,
            )
        basis._series_cache[key] = hit
    return hit


def _lie(basis: HallBasis, i: int) -> Series:
    b = basis.elements[i]
    if b.generator is not None:
        return {(b.generator,): 1}
    u, v = _lie(basis, b.left), _lie(basis, b.right)
    out: Series = {}
    for ka, va in u.items():
        for kb, vb in v.items():
            out[ka + kb] = out.get(ka + kb, 0) + va * vb
            out[kb + ka] = out.get(kb + ka, 0) - va * vb
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _weight_solver(n: int, c: int, w: int):
    """Echelon form of the weight-w Lie polynomials over the rationals."""
    basis = hall_basis(n, c)
    idx = basis.indices_of_weight(w)
    rows = []  # (pivot, vector, combination over idx positions)
    for pos, i in enumerate(idx):
        vec = {k: Fraction(v) for k, v in _lie(basis, i).items()}
        comb = {pos: Fraction(1)}
        for pivot, pvec, pcomb in rows:
            f = vec.get(pivot)
            if f:
                f = f / pvec[pivot]
                for k, v in pvec.items():
                    vec[k] = vec.get(k, 0) - f * v
                for k, v in pcomb.items():
                    comb[k] = comb.get(k, 0) - f * v
                vec = {k: v for k, v in vec.items() if v}
        if not vec:
            raise AssertionError(f"Lie polynomials of weight {w} are dependent")
        pivot = min(vec)
        rows.append((pivot, vec, comb))
    return idx, rows


def _solve_weight(target: Series, basis: HallBasis, w: int) -> dict[int, int]:
    idx, rows = _weight_solver(basis.rank, basis.nilpotency_class, w)
    rem = {k: Fraction(v) for k, v in target.items()}
    coeff = [Fraction(0)] * len(idx)
    for pivot, vec, comb in rows:
        f = rem.get(pivot)
        if f:
            f = f / vec[pivot]
            for k, v in vec.items():
                rem[k] = rem.get(k, 0) - f * v
            for k, v in comb.items():
                coeff[k] += f * v
    if any(rem.values()):
        raise AssertionError(f"degree-{w} part is not a Lie element")
    out = {}
    for pos, q in enumerate(coeff):
        if q.denominator != 1:
            raise AssertionError("non-integral Hall coordinate")
        if q:
            out[idx[pos]] = int(q)
    return out


def magnus_normal_form(series: Series, basis: HallBasis) -> tuple[int, ...]:
    deg = basis.nilpotency_class
    exps = [0] * len(basis)
    cur = dict(series)
    for w in range(1, deg + 1):
        part = {k: v for k, v in cur.items() if len(k) == w}
        if any(k and len(k) < w for k in cur):
            raise AssertionError("lower-degree terms survived peeling")
        sol = _solve_weight(part, basis, w)
        if not sol:
            continue
        # peel b_i^e_i off the left in basis order
        for i in sorted(sol):
            exps[i] = sol[i]
            cur = _s_mul(_s_pow(_basis_series(basis, i, 1), -sol[i], deg), cur, deg)
    if cur != {(): 1}:
        raise AssertionError("Magnus peeling left a remainder")
    return tuple(exps)


def magnus_collect(word: Word, basis: HallBasis) -> tuple[int, ...]:
    return magnus_normal_form(magnus(word, basis.rank, basis.nilpotency_class), basis)
