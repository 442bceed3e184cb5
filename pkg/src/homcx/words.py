"""Words over numbered generators and free reduction.

A word is a sequence of syllables ``(generator, exponent)`` with 0-based
generator indices.  ``Word`` keeps whatever letters it is given; products
built with ``*``, ``inverse`` and ``**`` are freely reduced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Letter = tuple[int, int]


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((int(g), int(e)) for g, e in self.letters)
        for g, e in letters:
            if g < 0:
                raise ValueError(f"negative generator index {g}")
            if e == 0:
                raise ValueError("zero exponent in word")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def gen(cls, index: int, exponent: int = 1) -> Word:
        return cls(((index, exponent),)) if exponent else cls()

    @classmethod
    def identity(cls) -> Word:
        return cls()

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: Word) -> Word:
        return free_reduce(self.letters + other.letters)

    def inverse(self) -> Word:
        return free_reduce(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return self.inverse() ** (-k)
        out = Word()
        base = free_reduce(self.letters)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def max_generator(self) -> int:
        """Largest generator index used, or -1 for the empty word."""
        return max((g for g, _ in self.letters), default=-1)

    def shift(self, offset: int) -> Word:
        return Word(tuple((g + offset, e) for g, e in self.letters))

    def substitute(self, images: Sequence[Word]) -> Word:
        out: list[Letter] = []
        for g, e in self.letters:
            img = images[g]
            if e < 0:
                img = img.inverse()
            out.extend(img.letters * abs(e))
        return free_reduce(out)

    def exponent_sums(self, rank: int) -> tuple[int, ...]:
        sums = [0] * rank
        for g, e in self.letters:
            sums[g] += e
        return tuple(sums)

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.letters:
            return "e"
        parts = []
        for g, e in self.letters:
            name = names[g] if names is not None else f"a{g + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        return self.format()


def free_reduce(letters: Word | Iterable[Letter]) -> Word:
    """Cancel adjacent inverse pairs and merge equal neighbours."""
    if isinstance(letters, Word):
        letters = letters.letters
    stack: list[list[int]] = []
    for g, e in letters:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, e])
    return Word(tuple((g, e) for g, e in stack))


def commutator(x: Word, y: Word) -> Word:
    """[x, y] = x^-1 y^-1 x y."""
    return x.inverse() * y.inverse() * x * y


def left_normed(words: Sequence[Word]) -> Word:
    """[[...[w1, w2], ...], wk]."""
    out = words[0]
    for w in words[1:]:
        out = commutator(out, w)
    return out


def default_names(count: int, first: int = 1) -> tuple[str, ...]:
    return tuple(f"a{k}" for k in range(first, first + count))


_TOKEN = re.compile(r"^\s*([A-Za-z_]+\d*)\s*(?:\^\s*(-?\d+))?\s*$")


def parse_word(text: str, names: Sequence[str] | None = None) -> Word:
    """Parse ``a1^2*a2^-1`` style text.

    With ``names`` the tokens are looked up in that list; otherwise ``a<k>``
    maps to index ``k - 1``.  ``e``, ``1`` and the empty string give the
    identity.
    """
    text = text.strip()
    if text in ("", "e", "1"):
        return Word()
    letters = []
    for token in text.split("*"):
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"cannot parse word token {token!r}")
        name, exp = m.group(1), int(m.group(2) or 1)
        if names is not None:
            if name not in names:
                raise ValueError(f"unknown generator {name!r}; expected one of {list(names)}")
            index = list(names).index(name)
        else:
            fm = re.fullmatch(r"a(\d+)", name)
            if not fm or int(fm.group(1)) < 1:
                raise ValueError(f"generator {name!r} must look like a1, a2, ...")
            index = int(fm.group(1)) - 1
        if exp:
            letters.append((index, exp))
    return Word(tuple(letters))
