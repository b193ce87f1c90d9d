"""Decorated n-connectors: perfect matchings of 2n boundary points with a 0/1 label per pair.

Endpoints are signed integers: ``i > 0`` is top point i, ``-i`` is bottom point i.
The fixed total order is top 1 < ... < top n < bottom 1 < ... < bottom n.
"""

from __future__ import annotations

import enum
import math
import re
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class ConnectorError(ValueError):
    """Base class for invalid connector input."""


class NotAMatching(ConnectorError):
    pass


class OddDecoration(ConnectorError):
    pass


class OutOfRange(ConnectorError):
    pass


def _key(n: int, ep: int) -> int:
    return ep - 1 if ep > 0 else n - ep - 1


def _endpoint(n: int, k: int) -> int:
    return k + 1 if k < n else -(k - n + 1)


class Connector:
    """A validated decorated n-connector in canonical form.

    ``pairs`` is a tuple of ``(a, b, dec)`` with ``a < b`` in endpoint order,
    sorted by ``a``. ``partner[k]`` / ``dec[k]`` give the index-level view used
    by the product engine (index ``k`` is top ``k+1`` for ``k < n``, else bottom).
    """

    __slots__ = ("n", "partner", "dec", "_pairs", "_hash")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int, int]]):
        if n < 1:
            raise OutOfRange(f"OutOfRange: n must be positive, got {n}")
        partner = [-1] * (2 * n)
        dec = [0] * (2 * n)
        ndec = 0
        for a, b, d in pairs:
            for ep in (a, b):
                if ep == 0 or abs(ep) > n:
                    raise OutOfRange(f"OutOfRange: endpoint {ep} not in [-{n}, {n}]")
            ka, kb = _key(n, a), _key(n, b)
            if ka == kb or partner[ka] != -1 or partner[kb] != -1:
                raise NotAMatching(f"NotAMatching: endpoint repeated in pair ({a}, {b})")
            d = 1 if d else 0
            partner[ka], partner[kb] = kb, ka
            dec[ka] = dec[kb] = d
            ndec += d
        if -1 in partner:
            missing = _endpoint(n, partner.index(-1))
            raise NotAMatching(f"NotAMatching: endpoint {missing} is unmatched")
        if ndec % 2:
            raise OddDecoration(f"OddDecoration: {ndec} decorated pairs")
        self._init(n, tuple(partner), tuple(dec))

    def _init(self, n: int, partner: tuple[int, ...], dec: tuple[int, ...]) -> None:
        self.n = n
        self.partner = partner
        self.dec = dec
        self._pairs = None
        self._hash = hash((partner, dec))

    @property
    def pairs(self) -> tuple[tuple[int, int, int], ...]:
        if self._pairs is None:
            n, partner, dec = self.n, self.partner, self.dec
            self._pairs = tuple(
                (_endpoint(n, k), _endpoint(n, partner[k]), dec[k]) for k in range(2 * n) if k < partner[k]
            )
        return self._pairs

    @classmethod
    def from_arrays(cls, n: int, partner: Sequence[int], dec: Sequence[int]) -> Connector:
        """Trusted constructor from index arrays (no validation)."""
        obj = cls.__new__(cls)
        obj._init(n, tuple(partner), tuple(dec))
        return obj

    @classmethod
    def identity(cls, n: int) -> Connector:
        return cls(n, [(i, -i, 0) for i in range(1, n + 1)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Connector):
            return NotImplemented
        return self.n == other.n and self.partner == other.partner and self.dec == other.dec

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        return (self.n, self.partner, self.dec)

    def __lt__(self, other: Connector) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        body = " ".join(f"{{{a} {b}}}" + ("*" if d else "") for a, b, d in self.pairs)
        return f"n:{self.n} {body}"

    def __repr__(self) -> str:
        return f"Connector({str(self)!r})"

    # --- derived data ---------------------------------------------------

    def horizontal_pairs(self, top: bool = True) -> list[tuple[int, int, int]]:
        """Horizontal pairs on one side as ``(i, j, dec)`` with ``0 < i < j``."""
        out = []
        for a, b, d in self.pairs:
            if top and a > 0 and b > 0:
                out.append((a, b, d))
            elif not top and a < 0 and b < 0:
                out.append((-a, -b, d))
        return out

    def through_map(self) -> dict[int, int]:
        """Map bottom j -> signed top i for each vertical pair (negative when decorated)."""
        out = {}
        for a, b, d in self.pairs:
            if a > 0 > b:
                out[-b] = -a if d else a
        return out

    @property
    def has_horizontal(self) -> bool:
        n, partner = self.n, self.partner
        return any(partner[k] < n for k in range(n))

    @property
    def undecorated(self) -> bool:
        return not any(self.dec)

    @property
    def n_decorated(self) -> int:
        return sum(d for _, _, d in self.pairs)

    # --- parsing ----------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> Connector:
        """Parse ``n:4 {1 2}* {3 -1} {4 -4}* {-2 -3}``."""
        m = re.fullmatch(r"\s*n:(\d+)\s*(.*?)\s*", text)
        if m is None:
            raise ValueError(f"bad connector literal: {text!r}")
        n = int(m.group(1))
        body = m.group(2)
        pair_re = re.compile(r"\{\s*(-?\d+)\s+(-?\d+)\s*\}(\*?)\s*")
        pairs = []
        pos = 0
        while pos < len(body):
            pm = pair_re.match(body, pos)
            if pm is None:
                raise ValueError(f"bad connector literal: {text!r}")
            pairs.append((int(pm.group(1)), int(pm.group(2)), 1 if pm.group(3) else 0))
            pos = pm.end()
        return cls(n, pairs)


def make_connector(n: int, pairs: Iterable[tuple[int, int, int]]) -> Connector:
    return Connector(n, pairs)


def classify(c: Connector) -> tuple[bool, bool, int]:
    """Return (has_horizontal, undecorated, number of top horizontal pairs)."""
    return c.has_horizontal, c.undecorated, len(c.horizontal_pairs(top=True))


def opposition(c: Connector) -> Connector:
    return Connector(c.n, [(-a, -b, d) for a, b, d in c.pairs])


def strip(c: Connector) -> Connector:
    if c.undecorated:
        return c
    return Connector.from_arrays(c.n, c.partner, (0,) * (2 * c.n))


def pole_flip(c: Connector) -> Connector:
    """Toggle the labels of the pairs through top 1 and through bottom 1."""
    dec = list(c.dec)
    for k in (0, c.n):
        for x in (k, c.partner[k]):
            dec[x] ^= 1
    return Connector.from_arrays(c.n, c.partner, dec)


class Filter(enum.Enum):
    ALL = "all"
    UNDECORATED = "undecorated"
    HORIZONTAL = "horizontal"
    HORIZONTAL_UNDECORATED = "horizontal-undecorated"


def _matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for k, q in enumerate(rest):
        for tail in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, q), *tail]


@lru_cache(maxsize=None)
def _matching_arrays(n: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for m in _matchings(list(range(2 * n))):
        partner = [0] * (2 * n)
        for a, b in m:
            partner[a], partner[b] = b, a
        out.append(tuple(partner))
    return tuple(out)


def _even_masks(n: int) -> list[int]:
    return [m for m in range(1 << n) if bin(m).count("1") % 2 == 0]


def enumerate_connectors(n: int, filter: Filter = Filter.ALL) -> list[Connector]:
    """All connectors of size n in the fixed deterministic order."""
    return list(_enumerate(n, Filter(filter)))


@lru_cache(maxsize=16)
def _enumerate(n: int, filter: Filter) -> tuple[Connector, ...]:
    want_h = filter in (Filter.HORIZONTAL, Filter.HORIZONTAL_UNDECORATED)
    masks = [0] if filter in (Filter.UNDECORATED, Filter.HORIZONTAL_UNDECORATED) else _even_masks(n)
    out = []
    for partner in _matching_arrays(n):
        if want_h and all((k < n) != (partner[k] < n) for k in range(n)):
            continue
        lows = [k for k in range(2 * n) if k < partner[k]]
        for mask in masks:
            dec = [0] * (2 * n)
            for bit, k in enumerate(lows):
                if mask >> bit & 1:
                    dec[k] = dec[partner[k]] = 1
            out.append(Connector.from_arrays(n, partner, dec))
    return tuple(out)


def double_factorial(n: int) -> int:
    """Product of the first n odd integers."""
    return math.prod(range(1, 2 * n, 2))


def count(n: int) -> dict[str, int]:
    """Closed-form sizes of the connector families and algebra dimensions."""
    if n < 1:
        raise OutOfRange(f"OutOfRange: n must be positive, got {n}")
    nn, nf = double_factorial(n), math.factorial(n)
    t = 2 ** (n - 1) * nn
    t0 = nn
    teq = 2 ** (n - 1) * (nn - nf)
    t0eq = nn - nf
    return {
        "T": t,
        "T0": t0,
        "Teq": teq,
        "T0eq": t0eq,
        "d": t + teq + t0eq,
        "ext": (2**n + 1) * nn,
    }


def dimension(n: int) -> int:
    """(2^n + 1) n!! - (2^(n-1) + 1) n!."""
    return (2**n + 1) * double_factorial(n) - (2 ** (n - 1) + 1) * math.factorial(n)
