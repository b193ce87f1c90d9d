"""Generator diagrams, word evaluation, and the monomial normal form u e_X z v.

``nu`` sends a monomial to its Brauer diagram by evaluating the expanded word;
``nu_inverse`` reads a monomial back off a basis diagram.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Iterable, NamedTuple, Sequence

from .algebra import AlgebraElement, BasisDiagram, BasisViolation, Mode, multiply
from .connectors import Connector
from .laurent import ONE_POLY, LambdaClass, LaurentPoly
from .weyl import (
    AdmissibleClass,
    Root,
    SignedPermutation,
    Variant,
    admissible_Y,
    mate,
    orbit_classify,
    reduced_word,
    simple_root,
)


class NormalFormError(ValueError):
    pass


class IndexOutOfRange(NormalFormError):
    pass


class ModeViolation(NormalFormError):
    pass


class Malformed(NormalFormError):
    pass


class NotBasis(NormalFormError):
    pass


# --- generator diagrams ------------------------------------------------------


def _check_root(r: Root, n: int) -> None:
    if not 1 <= r.i < r.j <= n:
        raise IndexOutOfRange(f"IndexOutOfRange: root {r} for n={n}")


def r_connector(r: Root, n: int) -> Connector:
    _check_root(r, n)
    d = int(r.plus)
    pairs = [(x, -x, 0) for x in range(1, n + 1) if x not in (r.i, r.j)]
    pairs += [(r.i, -r.j, d), (r.j, -r.i, d)]
    return Connector(n, pairs)


def e_connector(r: Root, n: int) -> Connector:
    _check_root(r, n)
    d = int(r.plus)
    pairs = [(x, -x, 0) for x in range(1, n + 1) if x not in (r.i, r.j)]
    pairs += [(r.i, r.j, d), (-r.i, -r.j, d)]
    return Connector(n, pairs)


def _node(i: int, n: int) -> Root:
    if not 1 <= i <= n or n < 2:
        raise IndexOutOfRange(f"IndexOutOfRange: node {i} for n={n}")
    return simple_root(i)


def gen_r_beta(r: Root, n: int, mode: Mode = Mode.STRICT) -> AlgebraElement:
    return AlgebraElement.from_diagram(r_connector(r, n), mode=mode)


def gen_e_beta(r: Root, n: int, mode: Mode = Mode.STRICT) -> AlgebraElement:
    return AlgebraElement.from_diagram(e_connector(r, n), mode=mode)


def gen_r(i: int, n: int, mode: Mode = Mode.STRICT) -> AlgebraElement:
    return gen_r_beta(_node(i, n), n, mode)


def gen_e(i: int, n: int, mode: Mode = Mode.STRICT) -> AlgebraElement:
    return gen_e_beta(_node(i, n), n, mode)


def gen_e_star(i: int, n: int, mode: Mode = Mode.STRICT) -> AlgebraElement:
    if i < 2:
        raise IndexOutOfRange(f"IndexOutOfRange: e*{i} needs i >= 2")
    return gen_e_beta(mate(_node(i, n)), n, mode)


# --- words -------------------------------------------------------------------


class Gen(NamedTuple):
    """One letter of a generator word.

    ``kind`` is one of ``r``, ``e``, ``e*``, ``rb``, ``eb``, ``xi``, ``theta``, ``d``;
    ``arg`` is a node index, a Root, or a delta exponent.
    """

    kind: str
    arg: object = None

    def __str__(self) -> str:
        if self.kind in ("r", "e", "e*"):
            return f"{self.kind}{self.arg}"
        if self.kind == "rb":
            return f"r[{self.arg}]"
        if self.kind == "eb":
            return f"e[{self.arg}]"
        if self.kind == "d":
            return f"d^{self.arg}"
        return self.kind


R = lambda i: Gen("r", i)  # noqa: E731
E = lambda i: Gen("e", i)  # noqa: E731
ESTAR = lambda i: Gen("e*", i)  # noqa: E731
RBETA = lambda r: Gen("rb", r)  # noqa: E731
EBETA = lambda r: Gen("eb", r)  # noqa: E731
XI = Gen("xi")
THETA = Gen("theta")
DELTA = lambda k: Gen("d", k)  # noqa: E731

_TOKEN_RE = re.compile(r"(r|e\*|e)(\d+)|(r|e)\[([^\]]+)\]|xi|theta|d\^(-?\d+)")


def parse_word(text: str) -> list[Gen]:
    """Parse whitespace-separated ``r2 e1 e*3 r[e3+e1] e[e3-e1] xi theta d^-1``."""
    out = []
    for tok in text.split():
        m = _TOKEN_RE.fullmatch(tok)
        if m is None:
            raise Malformed(f"Malformed: bad word token {tok!r}")
        if m.group(1):
            out.append(Gen(m.group(1), int(m.group(2))))
        elif m.group(3):
            out.append(Gen(m.group(3) + "b", Root.parse(m.group(4))))
        elif tok == "xi":
            out.append(XI)
        elif tok == "theta":
            out.append(THETA)
        else:
            out.append(DELTA(int(m.group(5))))
    return out


def format_word(word: Iterable[Gen]) -> str:
    return " ".join(str(g) for g in word)


def gen_element(g: Gen, n: int, mode: Mode = Mode.STRICT) -> AlgebraElement:
    mode = Mode(mode)
    if g.kind == "r":
        return gen_r(g.arg, n, mode)
    if g.kind == "e":
        return gen_e(g.arg, n, mode)
    if g.kind == "e*":
        return gen_e_star(g.arg, n, mode)
    if g.kind == "rb":
        return gen_r_beta(g.arg, n, mode)
    if g.kind == "eb":
        return gen_e_beta(g.arg, n, mode)
    if g.kind == "d":
        return AlgebraElement.identity(n, mode).scale(LaurentPoly.monomial(g.arg))
    if g.kind in ("xi", "theta"):
        if mode is not Mode.EXTENDED:
            raise ModeViolation(f"ModeViolation: {g.kind} needs extended mode")
        cls = LambdaClass.XI if g.kind == "xi" else LambdaClass.THETA
        return AlgebraElement.from_diagram(Connector.identity(n), cls, mode=mode)
    raise ValueError(f"unknown generator kind {g.kind!r}")


def eval_word(n: int, word: Sequence[Gen], mode: Mode = Mode.STRICT) -> AlgebraElement:
    """Left-to-right product of the generators' diagrams."""
    mode = Mode(mode)
    acc = AlgebraElement.identity(n, mode)
    for g in word:
        acc = multiply(acc, gen_element(g, n, mode))
    return acc


# --- monomials -----------------------------------------------------------------


@dataclass(frozen=True)
class Monomial:
    """``d**delta_exp * u e_X (r*)^k_star z0 v`` with words over simple generators."""

    n: int
    u_word: tuple[int, ...]
    cls: AdmissibleClass
    k_star: int
    z0_word: tuple[int, ...]
    v_word: tuple[int, ...]
    delta_exp: int = 0

    def check(self) -> None:
        t = self.cls.t
        if self.k_star not in (0, 1):
            raise Malformed(f"Malformed: k_star={self.k_star}")
        if self.k_star and (t == 0 or self.cls.variant is Variant.YSTAR):
            raise Malformed("Malformed: k_star needs a Y or Y' class with t >= 1")
        if any(not 1 <= k <= self.n - 2 * t for k in self.z0_word):
            raise Malformed(f"Malformed: z0 word {self.z0_word} leaves generators 1..{self.n - 2 * t}")
        for k in (*self.u_word, *self.v_word):
            if not 1 <= k <= self.n:
                raise Malformed(f"Malformed: generator {k} out of range")

    def star_root(self) -> Root:
        """Mate of the first root of the admissible set (alpha_n in general)."""
        return mate(admissible_Y(self.n, self.cls.t, self.cls.variant)[0])

    def word(self) -> list[Gen]:
        out = [R(k) for k in self.u_word]
        t, var = self.cls.t, self.cls.variant
        if t:
            if var is Variant.YSTAR:
                for r in admissible_Y(self.n, t, Variant.Y):
                    out += [EBETA(r), EBETA(mate(r))]
            else:
                out += [EBETA(r) for r in admissible_Y(self.n, t, var)]
        if self.k_star:
            out.append(RBETA(self.star_root()))
        out += [R(k) for k in self.z0_word]
        out += [R(k) for k in self.v_word]
        if self.delta_exp:
            out.append(DELTA(self.delta_exp))
        return out

    def __str__(self) -> str:
        return (
            f"u=[{' '.join(map(str, self.u_word))}] X={self.cls} k={self.k_star} "
            f"z0=[{' '.join(map(str, self.z0_word))}] v=[{' '.join(map(str, self.v_word))}] "
            f"d^{self.delta_exp}"
        )


def nu(m: Monomial) -> AlgebraElement:
    m.check()
    return eval_word(m.n, m.word())


def _top_roots(pairs: list[tuple[int, int, int]], paired: bool) -> list[Root]:
    if paired:
        return [Root(i, j, p) for i, j, _ in pairs for p in (False, True)]
    return [Root(i, j, bool(d)) for i, j, d in pairs]


def nu_inverse(d: BasisDiagram | AlgebraElement) -> Monomial:
    """A monomial whose image is exactly ``d`` (coefficient 1)."""
    if isinstance(d, AlgebraElement):
        single = d.single_term()
        if single is None or single[1] != ONE_POLY or d.mode is not Mode.STRICT:
            raise NotBasis("NotBasis: expected a single strict basis diagram with coefficient 1")
        d = single[0]
    try:
        d = BasisDiagram.make(d.cls, d.conn)
        d.check(Mode.STRICT)
    except BasisViolation as exc:
        raise NotBasis(f"NotBasis: {exc}") from None
    conn, klass = d.conn, d.cls
    n = conn.n
    top = conn.horizontal_pairs(top=True)
    bot = conn.horizontal_pairs(top=False)
    t = len(top)
    sigma = conn.through_map()
    paired = klass is LambdaClass.THETA
    if t == 0:
        cls = AdmissibleClass(0)
        u = v = SignedPermutation.identity(n)
    else:
        cls, u = orbit_classify(_top_roots(top, paired), n)
        cls_b, w_bot = orbit_classify(_top_roots(bot, paired), n)
        if cls_b != cls:
            raise NotBasis(f"NotBasis: top class {cls} differs from bottom class {cls_b}")
        v = w_bot.inverse()
    # through-strand part moved to the free indices 1..n-2t
    free = n - 2 * t
    u_inv, v_inv = u.inverse(), v.inverse()
    image = list(range(1, n + 1))
    for x in range(1, free + 1):
        y = v_inv(x)  # bottom point (signed) reached from free index x
        top_pt = sigma[abs(y)] * (1 if y > 0 else -1)
        z = u_inv(top_pt)
        if not 1 <= abs(z) <= free:
            raise NotBasis(f"NotBasis: through strands do not fit class {cls}")
        image[x - 1] = abs(z) if paired else z
    z_perm = SignedPermutation(image)
    m = Monomial(
        n=n,
        u_word=tuple(reduced_word(u)),
        cls=cls,
        k_star=int(klass is LambdaClass.XI),
        z0_word=tuple(reduced_word(z_perm)),
        v_word=tuple(reduced_word(v)),
    )
    bd, coeff = _evaluate_single(m)
    if bd.cls != klass and cls.t and cls.variant is not Variant.YSTAR:
        m = replace(m, k_star=1 - m.k_star)
        bd, coeff = _evaluate_single(m)
    mono = coeff.as_monomial()
    if bd != d or mono is None or mono[1] != 1:
        raise NotBasis(f"NotBasis: could not reconstruct {d} (got {coeff} * {bd})")
    return replace(m, delta_exp=-mono[0])


def _evaluate_single(m: Monomial) -> tuple[BasisDiagram, LaurentPoly]:
    single = nu(m).single_term()
    if single is None:  # pragma: no cover - products of basis diagrams are single terms
        raise NotBasis("NotBasis: monomial evaluated to a sum")
    return single
