"""Root system and Weyl group of type D_n, realized by signed permutations.

Positive roots are e_j - e_i and e_j + e_i with j > i. Simple roots are
alpha_1 = e_2 + e_1 and alpha_i = e_i - e_(i-1) for i >= 2. A signed
permutation ``w`` is stored by its images ``w(1), ..., w(n)``; ``w(-k) = -w(k)``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence


class WeylError(ValueError):
    pass


class OddNegatives(WeylError):
    pass


class BadVariant(WeylError):
    pass


class NotOrthogonal(WeylError):
    pass


class NotAdmissible(WeylError):
    pass


class Root(NamedTuple):
    """``e_j + e_i`` if ``plus`` else ``e_j - e_i``, with ``i < j``."""

    i: int
    j: int
    plus: bool

    def __str__(self) -> str:
        return f"e{self.j}{'+' if self.plus else '-'}e{self.i}"

    @classmethod
    def parse(cls, text: str) -> Root:
        m = re.fullmatch(r"\s*e(\d+)\s*([+-])\s*e(\d+)\s*", text)
        if m is None:
            raise ValueError(f"bad root literal: {text!r}")
        j, i = int(m.group(1)), int(m.group(3))
        if not 1 <= i < j:
            raise ValueError(f"bad root literal: {text!r} (need e<j>+-e<i> with j > i >= 1)")
        return cls(i, j, m.group(2) == "+")


def simple_root(k: int) -> Root:
    if k < 1:
        raise ValueError(f"no simple root {k}")
    return Root(1, 2, True) if k == 1 else Root(k - 1, k, False)


def mate(r: Root) -> Root:
    return Root(r.i, r.j, not r.plus)


def orthogonal(a: Root, b: Root) -> bool:
    if {a.i, a.j}.isdisjoint((b.i, b.j)):
        return True
    return (a.i, a.j) == (b.i, b.j) and a.plus != b.plus


def positive_roots(n: int) -> list[Root]:
    return [Root(i, j, p) for j in range(2, n + 1) for i in range(1, j) for p in (False, True)]


class SignedPermutation:
    __slots__ = ("image",)

    def __init__(self, image: Sequence[int], check: bool = True):
        self.image = tuple(image)
        if check:
            n = len(self.image)
            if sorted(abs(x) for x in self.image) != list(range(1, n + 1)):
                raise ValueError(f"not a signed permutation: {list(self.image)}")
            if sum(x < 0 for x in self.image) % 2:
                raise OddNegatives(f"OddNegatives: {list(self.image)} is not in W(D_{n})")

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls(range(1, n + 1), check=False)

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        y = self.image[abs(x) - 1]
        return y if x > 0 else -y

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        """Composition: (self * other)(x) = self(other(x))."""
        return SignedPermutation([self(y) for y in other.image], check=False)

    def inverse(self) -> SignedPermutation:
        out = [0] * self.n
        for k, y in enumerate(self.image, start=1):
            out[abs(y) - 1] = k if y > 0 else -k
        return SignedPermutation(out, check=False)

    def is_identity(self) -> bool:
        return self.image == tuple(range(1, self.n + 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __str__(self) -> str:
        return "[" + " ".join(str(x) for x in self.image) + "]"

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.image)})"

    @classmethod
    def parse(cls, text: str) -> SignedPermutation:
        m = re.fullmatch(r"\s*\[([-\d\s]*)\]\s*", text)
        if m is None:
            raise ValueError(f"bad permutation literal: {text!r}")
        return cls([int(t) for t in m.group(1).split()])


def reflection(r: Root, n: int) -> SignedPermutation:
    image = list(range(1, n + 1))
    if r.plus:
        image[r.i - 1], image[r.j - 1] = -r.j, -r.i
    else:
        image[r.i - 1], image[r.j - 1] = r.j, r.i
    return SignedPermutation(image, check=False)


def simple_reflection(k: int, n: int) -> SignedPermutation:
    if not 1 <= k <= n or n < 2:
        raise ValueError(f"IndexOutOfRange: generator {k} for n={n}")
    return reflection(simple_root(k), n)


def word_to_perm(word: Iterable[int], n: int) -> SignedPermutation:
    w = SignedPermutation.identity(n)
    for k in word:
        w = w * simple_reflection(k, n)
    return w


def _image_vector(w: SignedPermutation, r: Root) -> tuple[int, int, int, int]:
    # w(e_j) + c w(e_i) as (index, coeff, index, coeff)
    wj, wi = w(r.j), w(r.i)
    c = 1 if r.plus else -1
    return abs(wj), (1 if wj > 0 else -1), abs(wi), c * (1 if wi > 0 else -1)


def _normalize(a: int, ca: int, b: int, cb: int) -> tuple[Root, int]:
    """Write ca*e_a + cb*e_b as sign * positive root."""
    if a < b:
        a, ca, b, cb = b, cb, a, ca
    sign = ca
    return Root(b, a, ca * cb > 0), sign


def act(w: SignedPermutation, r: Root) -> Root:
    """Image of ``r`` under ``w``, renormalized to a positive root."""
    return _normalize(*_image_vector(w, r))[0]


def act_signed(w: SignedPermutation, r: Root) -> tuple[Root, int]:
    return _normalize(*_image_vector(w, r))


def length(w: SignedPermutation) -> int:
    """Number of positive roots sent to negative roots."""
    total = 0
    img = w.image
    n = len(img)
    for j in range(n):
        for i in range(j):
            a, b = img[j], img[i]
            # e_j - e_i -> a - b ; e_j + e_i -> a + b (as signed unit vectors)
            total += _is_negative(a, -b) + _is_negative(a, b)
    return total


def _is_negative(a: int, b: int) -> bool:
    # sign(a) e_|a| + sign(b) e_|b| is negative iff the larger index has a negative coefficient
    return (a if abs(a) > abs(b) else b) < 0


def reduced_word(w: SignedPermutation) -> list[int]:
    """Reduced word by repeatedly stripping the smallest right descent."""
    n = w.n
    word: list[int] = []
    cur = w
    ell = length(cur)
    while ell:
        for k in range(1, n + 1):
            nxt = cur * simple_reflection(k, n)
            nl = length(nxt)
            if nl < ell:
                word.append(k)
                cur, ell = nxt, nl
                break
        else:  # pragma: no cover - a nonidentity element always has a descent
            raise AssertionError("no descent found")
    word.reverse()
    return word


class Variant(enum.Enum):
    Y = "Y"
    YPRIME = "Yprime"
    YSTAR = "YstarPaired"


@dataclass(frozen=True)
class AdmissibleClass:
    t: int
    variant: Variant = Variant.Y

    def __str__(self) -> str:
        return f"{self.variant.value}({self.t})"


def admissible_Y(n: int, t: int, variant: Variant = Variant.Y) -> list[Root]:
    """Standard admissible roots, listed as alpha_n, alpha_(n-2), ...

    ``YSTAR`` returns Y(t) followed by the mates of its roots.
    """
    variant = Variant(variant)
    if not 0 <= t <= n // 2:
        raise BadVariant(f"BadVariant: t={t} out of range for n={n}")
    roots = [simple_root(n - 2 * s) for s in range(t)]
    if variant is Variant.YPRIME:
        if n % 2 or 2 * t != n:
            raise BadVariant(f"BadVariant: Y' needs n even and t = n/2 (n={n}, t={t})")
        roots[-1] = simple_root(1)
    elif variant is Variant.YSTAR:
        roots = roots + [mate(r) for r in roots]
    return roots


def _pairs_witness(n: int, source: list[Root], target: list[Root]) -> list[int]:
    """Images sending each source root to the matching target root, free indices in order."""
    image = [0] * n
    for s, r in zip(source, target):
        c = 1 if s.plus else -1
        c1 = 1 if r.plus else -1
        image[s.j - 1] = r.j
        image[s.i - 1] = r.i * c * c1
    used_src = {x for s in source for x in (s.i, s.j)}
    used_tgt = {x for r in target for x in (r.i, r.j)}
    free_src = [x for x in range(1, n + 1) if x not in used_src]
    free_tgt = [x for x in range(1, n + 1) if x not in used_tgt]
    for a, b in zip(free_src, free_tgt):
        image[a - 1] = b
    return image


def orbit_classify(roots: Iterable[Root], n: int) -> tuple[AdmissibleClass, SignedPermutation]:
    """Classify an admissible root set and return ``w`` with ``w . Y = roots``."""
    S = sorted(set(roots))
    for a in range(len(S)):
        for b in range(a + 1, len(S)):
            if not orthogonal(S[a], S[b]):
                raise NotOrthogonal(f"NotOrthogonal: {S[a]} and {S[b]}")
    index_pairs: dict[tuple[int, int], list[Root]] = {}
    for r in S:
        index_pairs.setdefault((r.i, r.j), []).append(r)
    has_mates = any(len(v) == 2 for v in index_pairs.values())
    if has_mates:
        if not all(len(v) == 2 for v in index_pairs.values()):
            raise NotAdmissible("NotAdmissible: some but not all roots have their mates in the set")
        t = len(index_pairs)
        base = [Root(i, j, False) for (i, j) in sorted(index_pairs)]
        cls, w = orbit_classify(base, n)
        return AdmissibleClass(t, Variant.YSTAR), w
    t = len(S)
    if 2 * t > n:
        raise NotAdmissible(f"NotAdmissible: {t} orthogonal roots in D_{n}")
    plus = sum(r.plus for r in S)
    variant = Variant.YPRIME if 2 * t == n and plus % 2 else Variant.Y
    source = sorted(admissible_Y(n, t, variant))
    image = _pairs_witness(n, source, S)
    if sum(x < 0 for x in image) % 2:
        # 2t < n here: repair the sign parity on the first free index
        free = [x for x in range(1, n + 1) if x not in {y for s in source for y in (s.i, s.j)}]
        image[free[0] - 1] *= -1
    w = SignedPermutation(image)
    return AdmissibleClass(t, variant), w


@lru_cache(maxsize=None)
def _group_elements(n: int) -> tuple[SignedPermutation, ...]:
    from itertools import permutations, product

    out = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            if signs.count(-1) % 2 == 0:
                out.append(SignedPermutation([p * s for p, s in zip(perm, signs)], check=False))
    return tuple(out)


def group_elements(n: int) -> tuple[SignedPermutation, ...]:
    """All of W(D_n); intended for small n."""
    return _group_elements(n)
