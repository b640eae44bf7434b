"""Half-twist action on curves.

The sphere minus p_n deformation retracts onto a wedge of loops
x_1..x_{n-1}, where x_i dips under p_i (down through e_{i-1}, up through
e_i).  A t-word is read as a cyclic word in the x_i by its lower chords;
half-twists act by Artin's automorphisms, and the image is converted back
to a t-word and pulled tight.

sigma_i (1 <= i <= n-1) exchanges p_i and p_{i+1}; sigma_{n-1} exchanges
p_{n-1} with the point at infinity.  The chirality is fixed so that sigma_2
carries c_12 to the curve c_13 drawn with upper arcs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .curves import Curve, SurfaceSpec, normalize_word


class GeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorWord:
    """Product of half-twists, applied left to right."""

    letters: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(g), int(e)) for g, e in self.letters))

    def validate(self, surface: SurfaceSpec) -> None:
        n = surface.require_combinatorial()
        for g, e in self.letters:
            if not 1 <= g <= n - 1:
                raise GeneratorError(f"generator sigma_{g} not defined on {surface.name}")
            if e == 0:
                raise GeneratorError("zero exponent")

    def inverse(self) -> "GeneratorWord":
        return GeneratorWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord(self.letters + other.letters)

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    @classmethod
    def random(cls, rng: random.Random, surface: SurfaceSpec, length: int) -> "GeneratorWord":
        n = surface.require_combinatorial()
        return cls(tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)))

    @classmethod
    def parse(cls, text: str) -> "GeneratorWord":
        """'2,-3,1' means sigma_2 sigma_3^-1 sigma_1."""
        text = text.strip()
        if not text:
            return cls()
        out = []
        for tok in text.split(","):
            v = int(tok)
            if v == 0:
                raise GeneratorError("generator index 0 is invalid")
            out.append((abs(v), 1 if v > 0 else -1))
        return cls(tuple(out))


def _free_reduce(w: List[int]) -> List[int]:
    out: List[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def word_to_x(word: Sequence[int]) -> List[int]:
    """Lower chords of a t-word as a cyclic word in x_1..x_{n-1} (signed)."""
    out: List[int] = []
    m = len(word)
    for k in range(0, m, 2):
        a, b = word[k], word[(k + 1) % m]
        if a < b:
            out.extend(range(a + 1, b + 1))
        else:
            out.extend(-j for j in range(a, b, -1))
    return out


def x_to_word(xw: Sequence[int]) -> Tuple[int, ...]:
    letters = []
    for x in xw:
        i = abs(x)
        if x > 0:
            letters += [(i - 1, True), (i, False)]
        else:
            letters += [(i, True), (i - 1, False)]
    return normalize_word(letters)


def _images(n: int, g: int, e: int) -> Dict[int, List[int]]:
    """Images of the free generators under sigma_g^e."""
    img = {}
    if g <= n - 2:
        i, j = g, g + 1
        if e < 0:
            img[i] = [i, j, -i]
            img[j] = [i]
        else:
            img[i] = [j]
            img[j] = [-j, i, j]
    else:
        i = n - 1
        if e < 0:
            # x_{n-1} -> x_{n-1} x_n x_{n-1}^-1 with x_n = (x_1...x_{n-1})^-1
            img[i] = [-k for k in range(n - 2, 0, -1)] + [-i]
        else:
            img[i] = [-k for k in range(n - 1, 0, -1)]
    return img


def _apply_letter(xw: List[int], n: int, g: int, e: int) -> List[int]:
    img = _images(n, g, e)
    out: List[int] = []
    for x in xw:
        i = abs(x)
        if i in img:
            piece = img[i] if x > 0 else [-y for y in reversed(img[i])]
        else:
            piece = [x]
        out.extend(piece)
    return _free_reduce(out)


def apply_word_to_tword(word: Tuple[int, ...], n: int, gw: GeneratorWord) -> Tuple[int, ...]:
    xw = word_to_x(word)
    for g, e in gw.letters:
        for _ in range(abs(e)):
            xw = _apply_letter(xw, n, g, 1 if e > 0 else -1)
    return x_to_word(xw)


def apply_generator(w: GeneratorWord, c: Curve) -> Curve:
    """Image of ``c`` under the half-twist word ``w``."""
    w.validate(c.surface)
    if not w.letters:
        return c
    n = c.surface.punctures
    return Curve.from_word(c.surface, apply_word_to_tword(c.word, n, w))


def puncture_permutation(w: GeneratorWord, n: int) -> Tuple[int, ...]:
    """perm[p] = image of puncture p (index 0 unused)."""
    perm = list(range(n + 1))
    for g, e in w.letters:
        for _ in range(abs(e)):
            perm = [perm[0]] + [g + 1 if q == g else g if q == g + 1 else q for q in perm[1:]]
    return tuple(perm)
