"""Exact word problem in free solvable groups F_n / F^(d).

The Magnus embedding sends ``F / [R, R]`` into 2x2 matrices
``[[g, t], [0, 1]]`` with ``g`` in ``F / R`` and ``t`` in the free
``Z[F / R]``-module on ``n`` letters.  Taking ``R = F^(d-1)`` and recursing
gives a faithful model of ``F / F^(d)`` built on the trivial group at
depth 0.  Elements are canonical nested tuples, so equality is ``==``.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import GeneratorIndexOutOfRange
from .words import Word

# depth-d element: (base, module) where base is a depth-(d-1) element and
# module is a length-n tuple of sorted ((depth-(d-1) element, coeff), ...)
TRIVIAL = ()


def _freeze(vec: list[dict]) -> tuple:
    return tuple(tuple(sorted((k, v) for k, v in comp.items() if v)) for comp in vec)


def multiply(x, y, depth: int):
    if depth == 0:
        return TRIVIAL
    (a, tau), (b, sigma) = x, y
    out = [dict(comp) for comp in tau]
    for i, comp in enumerate(sigma):
        acc = out[i]
        for g, c in comp:
            k = multiply(a, g, depth - 1)
            acc[k] = acc.get(k, 0) + c
    return (multiply(a, b, depth - 1), _freeze(out))


def inverse(x, depth: int):
    if depth == 0:
        return TRIVIAL
    a, tau = x
    ai = inverse(a, depth - 1)
    out = []
    for comp in tau:
        acc: dict = {}
        for g, c in comp:
            k = multiply(ai, g, depth - 1)
            acc[k] = acc.get(k, 0) - c
        out.append(acc)
    return (ai, _freeze(out))


def identity(n: int, depth: int):
    if depth == 0:
        return TRIVIAL
    return (identity(n, depth - 1), tuple(() for _ in range(n)))


@lru_cache(maxsize=None)
def generator(i: int, n: int, depth: int):
    if depth == 0:
        return TRIVIAL
    module = [()] * n
    module[i] = ((identity(n, depth - 1), 1),)
    return (generator(i, n, depth - 1), tuple(module))


@lru_cache(maxsize=None)
def _gen_inverse(i: int, n: int, depth: int):
    return inverse(generator(i, n, depth), depth)


def image(word: Word, n: int, depth: int):
    """Image of ``word`` in F_n / F^(depth)."""
    if word.max_generator() >= n:
        raise GeneratorIndexOutOfRange(f"word uses generator {word.max_generator()} but rank is {n}")
    acc = identity(n, depth)
    for g, e in word.letters:
        step = generator(g, n, depth) if e > 0 else _gen_inverse(g, n, depth)
        for _ in range(abs(e)):
            acc = multiply(acc, step, depth)
    return acc


def is_trivial(word: Word, n: int, depth: int) -> bool:
    return image(word, n, depth) == identity(n, depth)
