"""The Brauer diagram algebra of type D_n and its strand-tracing product.

Decorations are tracked as tokens on strands. Every horizontal arc meeting the
middle interface of a stacked product carries one extremum; a token sits between
the arc's left endpoint and that extremum. Moving a token across an extremum
costs a factor xi/d, and only the parity of the total cost matters, so each
token contributes the parity of the number of extrema between it and the
reference end of its strand (the left endpoint for horizontal results).
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple

from .connectors import Connector, Filter, enumerate_connectors, opposition, pole_flip, strip
from .laurent import ONE_POLY, ZERO, LambdaClass, LaurentPoly, class_mul, pi_class


class AlgebraError(ValueError):
    pass


class SizeMismatch(AlgebraError):
    pass


class ModeMismatch(AlgebraError):
    pass


class BasisViolation(AlgebraError):
    """A product left the basis; only an engine defect can cause this."""


class Mode(enum.Enum):
    STRICT = "strict"
    EXTENDED = "extended"


class BasisDiagram(NamedTuple):
    cls: LambdaClass
    conn: Connector

    @classmethod
    def make(cls, klass: LambdaClass, conn: Connector) -> BasisDiagram:
        # theta kills decorations
        if klass is LambdaClass.THETA:
            conn = strip(conn)
        return cls(LambdaClass(klass), conn)

    def sort_key(self) -> tuple:
        return (int(self.cls), self.conn.sort_key())

    def check(self, mode: Mode) -> None:
        cls, conn = self.cls, self.conn
        if cls is LambdaClass.THETA and not conn.undecorated:
            raise BasisViolation(f"BasisViolation: theta with decorated connector {conn}")
        if mode is Mode.STRICT and cls is not LambdaClass.ONE and not conn.has_horizontal:
            raise BasisViolation(f"BasisViolation: {cls.token} with connector {conn} lacking a horizontal pair")

    def __str__(self) -> str:
        return f"{self.cls.token} ; {self.conn}"


def basis(n: int, mode: Mode = Mode.STRICT) -> list[BasisDiagram]:
    """The basis in its fixed order: T, xi*T(=), theta*T(0,=) (strict) or T, xi*T, theta*T(0) (extended)."""
    mode = Mode(mode)
    out = [BasisDiagram(LambdaClass.ONE, c) for c in enumerate_connectors(n, Filter.ALL)]
    if mode is Mode.STRICT:
        xi_f, th_f = Filter.HORIZONTAL, Filter.HORIZONTAL_UNDECORATED
    else:
        xi_f, th_f = Filter.ALL, Filter.UNDECORATED
    out += [BasisDiagram(LambdaClass.XI, c) for c in enumerate_connectors(n, xi_f)]
    out += [BasisDiagram(LambdaClass.THETA, c) for c in enumerate_connectors(n, th_f)]
    return out


class Trace(NamedTuple):
    partner: tuple[int, ...]
    dec: tuple[int, ...]
    toll: int  # parity over open strands
    plain_loops: int
    loop_toll: int  # parity over undecorated loops
    decorated_loops: int


def trace(c1: Connector, c2: Connector) -> Trace:
    """Stack c1 over c2 and follow every composite strand."""
    n = c1.n
    if c2.n != n:
        raise SizeMismatch(f"SizeMismatch: {n} vs {c2.n}")
    p1, q1, p2, q2 = c1.partner, c1.dec, c2.partner, c2.dec
    nn = 2 * n
    rpart = [-1] * nn
    rdec = [0] * nn
    seen = [False] * n  # interface points

    def walk(side: int, x: int, closed_at: int = -1) -> tuple[int, int, int]:
        # returns (result endpoint index or -1 for a loop, token count, token-position sum)
        e = tok = tsum = 0
        while True:
            if side == 1:
                y, d = p1[x], q1[x]
                if x >= n and y >= n:
                    a, b = x - n, y - n
                    if a < b:
                        if d:
                            tok += 1
                            tsum += e
                        e += 1
                    else:
                        e += 1
                        if d:
                            tok += 1
                            tsum += e
                elif d:
                    tok += 1
                    tsum += e
                if y < n:
                    return y, tok, tsum
                m = y - n
                seen[m] = True
                side, x = 2, m
            else:
                y, d = p2[x], q2[x]
                if x < n and y < n:
                    if x < y:
                        if d:
                            tok += 1
                            tsum += e
                        e += 1
                    else:
                        e += 1
                        if d:
                            tok += 1
                            tsum += e
                elif d:
                    tok += 1
                    tsum += e
                if y >= n:
                    return y, tok, tsum
                seen[y] = True
                if y == closed_at:
                    return -1, tok, tsum
                side, x = 1, n + y

    toll = 0
    for k in range(n):
        if rpart[k] != -1:
            continue
        end, tok, tsum = walk(1, k)
        rpart[k], rpart[end] = end, k
        rdec[k] = rdec[end] = tok & 1
        toll ^= tsum & 1
    for k in range(n, nn):
        if rpart[k] != -1:
            continue
        end, tok, tsum = walk(2, k)
        rpart[k], rpart[end] = end, k
        rdec[k] = rdec[end] = tok & 1
        toll ^= tsum & 1
    plain = loop_toll = decorated = 0
    for m in range(n):
        if seen[m]:
            continue
        seen[m] = True
        _, tok, tsum = walk(1, n + m, closed_at=m)
        if tok & 1:
            decorated += 1
        else:
            plain += 1
            loop_toll ^= tsum & 1
    return Trace(tuple(rpart), tuple(rdec), toll, plain, loop_toll, decorated)


@lru_cache(maxsize=1 << 18)
def multiply_basis(d1: BasisDiagram, d2: BasisDiagram) -> tuple[LambdaClass, int, BasisDiagram]:
    """Product of two basis diagrams as ``d**k * result`` (returned as (class, k, result)).

    The first component repeats ``result.cls`` for convenience.
    """
    tr = trace(d1.conn, d2.conn)
    cls, dexp = class_mul(d1.cls, d2.cls)
    dexp += tr.plain_loops
    if tr.toll ^ tr.loop_toll:
        cls, s = class_mul(cls, LambdaClass.XI)
        dexp += s - 1
    if tr.decorated_loops:
        cls, s = class_mul(cls, LambdaClass.THETA)
        dexp += s + tr.decorated_loops - 2
    conn = Connector.from_arrays(d1.conn.n, tr.partner, tr.dec)
    if cls is LambdaClass.THETA:
        conn = strip(conn)
    return cls, dexp, BasisDiagram(cls, conn)


class AlgebraElement:
    """A finite Z[d^(+-1)]-combination of basis diagrams."""

    __slots__ = ("n", "mode", "terms", "_hash")

    def __init__(
        self,
        n: int,
        terms: Mapping[BasisDiagram, LaurentPoly] | Iterable[tuple[BasisDiagram, LaurentPoly]] = (),
        mode: Mode = Mode.STRICT,
    ):
        self.n = n
        self.mode = Mode(mode)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[BasisDiagram, LaurentPoly] = {}
        for bd, c in items:
            if bd.conn.n != n:
                raise SizeMismatch(f"SizeMismatch: diagram of size {bd.conn.n} in element of size {n}")
            bd = BasisDiagram.make(bd.cls, bd.conn)
            bd.check(self.mode)
            acc[bd] = acc.get(bd, ZERO) + c
        self.terms = {k: acc[k] for k in sorted(acc, key=BasisDiagram.sort_key) if acc[k]}
        self._hash = None

    @classmethod
    def from_diagram(
        cls, conn: Connector, klass: LambdaClass = LambdaClass.ONE, coeff: LaurentPoly = ONE_POLY, mode: Mode = Mode.STRICT
    ) -> AlgebraElement:
        return cls(conn.n, [(BasisDiagram.make(klass, conn), coeff)], mode)

    @classmethod
    def identity(cls, n: int, mode: Mode = Mode.STRICT) -> AlgebraElement:
        return cls.from_diagram(Connector.identity(n), mode=mode)

    @classmethod
    def zero(cls, n: int, mode: Mode = Mode.STRICT) -> AlgebraElement:
        return cls(n, (), mode)

    def is_zero(self) -> bool:
        return not self.terms

    def _compatible(self, other: AlgebraElement) -> None:
        if self.n != other.n:
            raise SizeMismatch(f"SizeMismatch: {self.n} vs {other.n}")
        if self.mode is not other.mode:
            raise ModeMismatch(f"ModeMismatch: {self.mode.value} vs {other.mode.value}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._compatible(other)
        return AlgebraElement(self.n, [*self.terms.items(), *other.terms.items()], self.mode)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.n, [(k, -c) for k, c in self.terms.items()], self.mode)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return multiply(self, other)

    def scale(self, s: LaurentPoly | int) -> AlgebraElement:
        if isinstance(s, int):
            s = LaurentPoly.const(s)
        return AlgebraElement(self.n, [(k, c * s) for k, c in self.terms.items()], self.mode)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, tuple(self.terms.items())))
        return self._hash

    def single_term(self) -> tuple[BasisDiagram, LaurentPoly] | None:
        if len(self.terms) != 1:
            return None
        return next(iter(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{bd.cls.token}*({c}) ; {bd.conn}" for bd, c in self.terms.items())

    def __repr__(self) -> str:
        return f"AlgebraElement({str(self)!r})"

    @classmethod
    def parse(cls, text: str, n: int | None = None, mode: Mode = Mode.STRICT) -> AlgebraElement:
        """Parse ``scalar ; connector { + scalar ; connector }``; ``0`` needs ``n``."""
        from .laurent import LambdaScalar

        text = text.strip()
        if text == "0":
            if n is None:
                raise ValueError("the zero element needs an explicit n")
            return cls.zero(n, mode)
        chunks, depth, cur = [], 0, []
        for ch in text:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "+" and depth == 0:
                chunks.append("".join(cur))
                cur = []
            else:
                cur.append(ch)
        chunks.append("".join(cur))
        terms = []
        for chunk in chunks:
            if ";" not in chunk:
                raise ValueError(f"bad term {chunk.strip()!r}: expected 'scalar ; connector'")
            s_text, c_text = chunk.split(";", 1)
            sc = LambdaScalar.parse(s_text)
            conn = Connector.parse(c_text)
            if n is not None and conn.n != n:
                raise SizeMismatch(f"SizeMismatch: connector of size {conn.n}, expected {n}")
            terms.append((BasisDiagram.make(sc.cls, conn), sc.coeff))
        size = n if n is not None else terms[0][0].conn.n
        return cls(size, terms, mode)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._compatible(b)
    acc: dict[BasisDiagram, LaurentPoly] = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            _, k, bd = multiply_basis(d1, d2)
            acc[bd] = acc.get(bd, ZERO) + (c1 * c2).shift(k)
    return AlgebraElement(a.n, acc, a.mode)


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a + b


def scale(s: LaurentPoly, a: AlgebraElement) -> AlgebraElement:
    return a.scale(s)


def equals(a: AlgebraElement, b: AlgebraElement) -> bool:
    if a.n != b.n:
        raise SizeMismatch(f"SizeMismatch: {a.n} vs {b.n}")
    return a == b


def _termwise(a: AlgebraElement, f) -> AlgebraElement:
    return AlgebraElement(a.n, [(BasisDiagram.make(bd.cls, f(bd.conn)), c) for bd, c in a.terms.items()], a.mode)


def opposition_el(a: AlgebraElement) -> AlgebraElement:
    return _termwise(a, opposition)


def pole_flip_el(a: AlgebraElement) -> AlgebraElement:
    return _termwise(a, pole_flip)


def pi_el(a: AlgebraElement) -> AlgebraElement:
    """Type-A image: strip decorations, xi -> d, theta -> d^2."""
    return AlgebraElement(
        a.n,
        [(BasisDiagram(LambdaClass.ONE, strip(bd.conn)), c.shift(pi_class(bd.cls))) for bd, c in a.terms.items()],
        a.mode,
    )


# --- structure constants ---------------------------------------------------


def _sc_rows(args: tuple[int, str, int, int]) -> list[tuple[int, int, int, int, str]]:
    n, mode, lo, hi = args
    elems = basis(n, Mode(mode))
    index = {bd: k for k, bd in enumerate(elems)}
    rows = []
    for i in range(lo, hi):
        for j, d2 in enumerate(elems):
            cls, k, bd = multiply_basis(elems[i], d2)
            try:
                r = index[bd]
            except KeyError:
                raise BasisViolation(f"BasisViolation: product of basis {i} and {j} gave {bd}") from None
            rows.append((i, j, r, k, cls.token))
    return rows


def structure_constants(n: int, mode: Mode = Mode.STRICT, jobs: int = 1) -> list[tuple[int, int, int, int, str]]:
    """Rows ``(i, j, k, delta_exp, class)``: basis[i] * basis[j] = d**delta_exp * basis[k]."""
    mode = Mode(mode)
    size = len(basis(n, mode))
    if jobs <= 1:
        return _sc_rows((n, mode.value, 0, size))
    step = max(1, -(-size // (4 * jobs)))
    chunks = [(n, mode.value, lo, min(size, lo + step)) for lo in range(0, size, step)]
    rows: list = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_sc_rows, chunks):
            rows.extend(part)
    return rows


def dump_structure_constants(rows: Iterable[tuple[int, int, int, int, str]]) -> str:
    lines = ["i,j,k,delta_exp,class"]
    lines += [f"{i},{j},{k},{e},{c}" for i, j, k, e, c in rows]
    return "\n".join(lines) + "\n"


def iter_basis_elements(n: int, mode: Mode = Mode.STRICT) -> Iterator[AlgebraElement]:
    for bd in basis(n, mode):
        yield AlgebraElement(n, [(bd, ONE_POLY)], mode)
