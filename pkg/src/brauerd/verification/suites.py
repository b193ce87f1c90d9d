"""Conformance suites: relation batteries, identity families, campaigns and count checks.

Every suite draws its random cases from ``random.Random(seed)`` so identical
seeds give identical reports.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from ..algebra import (
    AlgebraElement,
    BasisDiagram,
    BasisViolation,
    Mode,
    add,
    basis,
    dump_structure_constants,
    equals,
    iter_basis_elements,
    multiply,
    multiply_basis,
    opposition_el,
    pi_el,
    pole_flip_el,
    scale,
    structure_constants,
)
from ..connectors import Connector, Filter, classify, count, dimension, enumerate_connectors, make_connector
from ..laurent import ONE_POLY, LambdaClass, LaurentPoly
from ..normal_forms import (
    eval_word,
    format_word,
    gen_e,
    gen_e_beta,
    gen_e_star,
    gen_r,
    gen_r_beta,
    nu,
    nu_inverse,
    parse_word,
)
from ..weyl import Root, SignedPermutation, group_elements, mate, positive_roots, reduced_word
from .oracle import typeA_oracle_product

DEFAULT_SEED = 20090101
DEFAULT_BUDGET = 10_000
XI_D = LaurentPoly.monomial(-1)  # coefficient of the xi/d scalar


class UnknownSuite(ValueError):
    pass


class BudgetExceeded(ValueError):
    pass


@dataclass
class Failure:
    case_id: str
    inputs: str
    expected: str
    actual: str


@dataclass
class SuiteReport:
    suite: str
    n: int
    seed: int
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0
    case_ids: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def replay_command(self) -> str:
        return f"brd check {self.suite} -n {self.n} --seed {self.seed}"

    def status_lines(self) -> list[str]:
        """Machine-readable ``<suite> <n> <case-id> <status>`` lines."""
        bad = {f.case_id for f in self.failures}
        return [f"{self.suite} {self.n} {cid} {'FAIL' if cid in bad else 'ok'}" for cid in self.case_ids]


def dump_failures(report: SuiteReport) -> str:
    head = f"{report.suite} n={report.n} cases={report.cases}"
    lines = [f"OK {head}" if report.ok else f"FAIL {head} failures={len(report.failures)}"]
    lines += [f"note: {x}" for x in report.notes]
    for f in report.failures:
        lines.append(f"case {f.case_id}: {f.inputs}")
        lines.append(f"  expected: {f.expected}")
        lines.append(f"  actual:   {f.actual}")
        lines.append(f"  replay:   {report.replay_command()}")
    return "\n".join(lines)


class _Run:
    def __init__(self, report: SuiteReport):
        self.report = report

    def check(self, case_id: str, inputs: str, expected, actual) -> bool:
        r = self.report
        r.cases += 1
        r.case_ids.append(case_id)
        if expected != actual:
            r.failures.append(Failure(case_id, inputs, str(expected), str(actual)))
            return False
        return True


def _adjacent(i: int, j: int) -> bool:
    a, b = sorted((i, j))
    if a in (1, 2) and b == 3:
        return True
    return a >= 2 and b == a + 1


def _elem(bd: BasisDiagram, mode: Mode = Mode.STRICT) -> AlgebraElement:
    return AlgebraElement(bd.conn.n, [(bd, ONE_POLY)], mode)


def _xi_d(a: AlgebraElement) -> AlgebraElement:
    """Multiply by the scalar xi/d."""
    n = a.n
    xi = AlgebraElement.from_diagram(Connector.identity(n), LambdaClass.XI, XI_D, mode=Mode.EXTENDED)
    ext = AlgebraElement(n, a.terms, Mode.EXTENDED)
    return AlgebraElement(n, multiply(xi, ext).terms, a.mode)


# --- individual suites ---------------------------------------------------------


def _relations(run: _Run, n: int, rng: random.Random, budget: int) -> None:
    nodes = range(1, n + 1)
    one = AlgebraElement.identity(n)
    delta = LaurentPoly.monomial(1)
    r = {i: gen_r(i, n) for i in nodes}
    e = {i: gen_e(i, n) for i in nodes}
    for i in nodes:
        run.check(f"D1[{i}]", f"r{i} r{i}", one, r[i] * r[i])
        run.check(f"R1[{i}]", f"r{i} e{i}", e[i], r[i] * e[i])
        run.check(f"RSer[{i}]", f"e{i} r{i}", e[i], e[i] * r[i])
        run.check(f"HSee[{i}]", f"e{i} e{i}", scale(delta, e[i]), e[i] * e[i])
    for i, j in itertools.permutations(nodes, 2):
        if _adjacent(i, j):
            run.check(f"B2[{i},{j}]", f"r{i} r{j} r{i}", r[j] * r[i] * r[j], r[i] * r[j] * r[i])
            run.check(f"R2[{i},{j}]", f"e{i} r{j} e{i}", e[i], e[i] * r[j] * e[i])
            run.check(f"RNrre[{i},{j}]", f"r{j} r{i} e{j}", e[i] * e[j], r[j] * r[i] * e[j])
            run.check(f"RNerr[{i},{j}]", f"e{i} r{j} r{i}", e[i] * e[j], e[i] * r[j] * r[i])
        else:
            run.check(f"B1[{i},{j}]", f"r{i} r{j}", r[j] * r[i], r[i] * r[j])
            run.check(f"HCer[{i},{j}]", f"e{i} r{j}", r[j] * e[i], e[i] * r[j])
            run.check(f"HCee[{i},{j}]", f"e{i} e{j}", e[j] * e[i], e[i] * e[j])


def f_connector(n: int, i: int, j: int, k: int, top: bool = True) -> Connector:
    """Identity except pairs {i,j} top and bottom; the vertical {k,-k} and one horizontal pair decorated."""
    pairs = [(x, -x, int(x == k)) for x in range(1, n + 1) if x not in (i, j)]
    pairs += [(i, j, int(top)), (-i, -j, int(not top))]
    return Connector(n, pairs)


def _root(a: int, b: int, plus: bool = False) -> Root:
    return Root(min(a, b), max(a, b), plus)


def _lemma_f(run: _Run, n: int, rng: random.Random, budget: int) -> None:
    for i, j in itertools.combinations(range(1, n + 1), 2):
        for k in range(1, n + 1):
            if k in (i, j):
                continue
            for beta_plus, top in ((False, True), (True, False)):
                beta = Root(i, j, beta_plus)
                target = AlgebraElement.from_diagram(f_connector(n, i, j, k, top))
                name = "f" if top else "g"
                for other, factor in ((i, False), (j, True)):
                    alpha = _root(k, other)
                    got = gen_r_beta(alpha, n) * gen_r_beta(mate(alpha), n) * gen_e_beta(beta, n)
                    want = _xi_d(target) if factor else target
                    run.check(
                        f"{name}[{i},{j},{k}|{alpha}]",
                        f"r[{alpha}] r[{mate(alpha)}] e[{beta}]",
                        want,
                        got,
                    )


def _chain_instances(n: int = 3) -> Iterator[tuple[str, Connector, Connector, bool]]:
    """d1 with bottom pair {a,b}, d2 with top pair {b,c}; yields (label, d1, d2, shared-left)."""
    pts = range(1, n + 1)
    for b in pts:
        for a, c in itertools.permutations([x for x in pts if x != b], 2):
            if not (b < a and b < c) and not (b > a and b > c):
                continue
            left = b < a
            for tp in itertools.combinations(pts, 2):
                r_top = next(x for x in pts if x not in tp)
                for bp in itertools.combinations(pts, 2):
                    s_bot = next(x for x in pts if x not in bp)
                    for m1 in range(4):
                        d1_pairs = [(tp[0], tp[1], m1 & 1), (-a, -b, m1 >> 1 & 1)]
                        d1_pairs.append((r_top, -c, (m1 & 1) ^ (m1 >> 1 & 1)))
                        for m2 in range(4):
                            d2_pairs = [(b, c, m2 & 1), (-bp[0], -bp[1], m2 >> 1 & 1)]
                            d2_pairs.append((a, -s_bot, (m2 & 1) ^ (m2 >> 1 & 1)))
                            label = f"b={b},a={a},c={c},top={tp},bot={bp},m={m1}{m2}"
                            yield label, Connector(n, d1_pairs), Connector(n, d2_pairs), left


def _remark_v(run: _Run, n: int, rng: random.Random, budget: int) -> None:
    """Horizontal chaining law on constructed instances of size 3."""
    size = 3
    for label, c1, c2, left in _chain_instances(size):
        d1 = BasisDiagram(LambdaClass.ONE, c1)
        d2 = BasisDiagram(LambdaClass.ONE, c2)
        cls, k, _ = multiply_basis(d1, d2)
        arc1 = next(d for a, b, d in c1.pairs if a < 0 and b < 0)
        arc2 = next(d for a, b, d in c2.pairs if a > 0 and b > 0)
        expect_xi = left and (arc1 ^ arc2)
        want = (LambdaClass.XI, -1) if expect_xi else (LambdaClass.ONE, 0)
        run.check(f"chain[{label}]", f"{c1} * {c2}", want, (cls, k))


def _remark_vi(run: _Run, n: int, rng: random.Random, budget: int) -> None:
    roots = positive_roots(n)
    for a in roots:
        got = gen_r_beta(mate(a), n) * gen_e_beta(a, n)
        run.check(f"rstar-e[{a}]", f"r[{mate(a)}] e[{a}]", _xi_d(gen_e_beta(a, n)), got)
    for i in range(2, n + 1):
        (bd, _), = gen_e(i, n).terms.items()
        want = AlgebraElement(n, [(BasisDiagram.make(LambdaClass.THETA, bd.conn), XI_D)])
        run.check(f"estar-e[{i}]", f"e*{i} e{i}", want, gen_e_star(i, n) * gen_e(i, n))
    for a, b in itertools.permutations(roots, 2):
        shared = {a.i, a.j} & {b.i, b.j}
        if len(shared) == 1:
            got = gen_r_beta(a, n) * gen_r_beta(mate(a), n) * gen_e_beta(b, n)
            want = _xi_d(gen_e_beta(mate(b), n) * gen_e_beta(a, n) * gen_e_beta(b, n))
            run.check(f"rr-e[{a},{b}]", f"r[{a}] r[{mate(a)}] e[{b}]", want, got)
        lhs = gen_r_beta(mate(a), n) * gen_e_beta(a, n) * gen_e_beta(b, n)
        rhs = gen_e_beta(a, n) * gen_r_beta(mate(b), n) * gen_e_beta(b, n)
        run.check(f"re-e[{a},{b}]", f"r[{mate(a)}] e[{a}] e[{b}]", rhs, lhs)
        lhs = gen_e_beta(mate(a), n) * gen_e_beta(a, n) * gen_e_beta(b, n)
        rhs = gen_e_beta(a, n) * gen_e_beta(mate(b), n) * gen_e_beta(b, n)
        run.check(f"ee-e[{a},{b}]", f"e[{mate(a)}] e[{a}] e[{b}]", rhs, lhs)


def _sample(rng: random.Random, pool: list, k: int, count: int) -> Iterator[tuple]:
    for _ in range(count):
        yield tuple(rng.choice(pool) for _ in range(k))


def _assoc(run: _Run, n: int, rng: random.Random, budget: int) -> None:
    B = basis(n)
    idx = {bd: k for k, bd in enumerate(B)}
    triples = itertools.product(B, repeat=3) if len(B) ** 3 <= budget else _sample(rng, B, 3, budget)
    for a, b, c in triples:
        ea, eb, ec = _elem(a), _elem(b), _elem(c)
        run.check(f"{idx[a]},{idx[b]},{idx[c]}", f"({a}) ({b}) ({c})", (ea * eb) * ec, ea * (eb * ec))
    zero = AlgebraElement.zero(n)
    for a, b, c in _sample(rng, B, 3, min(budget, 500)):
        ea, eb, ec = _elem(a), _elem(b), _elem(c)
        lhs = ea * add(eb, ec)
        rhs = add(add(ea * eb, ea * ec), zero)
        run.check(f"dist[{idx[a]},{idx[b]},{idx[c]}]", f"({a}) (({b}) + ({c}))", True, equals(lhs, rhs))
        run.check(f"cancel[{idx[a]},{idx[b]}]", f"({a}) ({b}) - same", True, (lhs - lhs).is_zero())


def _closure(run: _Run, n: int, rng: random.Random, budget: int) -> None:
    B = basis(n)
    idx = {bd: k for k, bd in enumerate(B)}
    pairs = itertools.product(B, repeat=2) if n <= 3 else _sample(rng, B, 2, budget)
    for a, b in pairs:
        try:
            _, _, bd = multiply_basis(a, b)
            bd.check(Mode.STRICT)
            status = bd in idx
        except BasisViolation as exc:
            status = f"BasisViolation: {exc}"
        run.check(f"{idx[a]},{idx[b]}", f"({a}) ({b})", True, status)
    if n <= 3:
        try:
            rows = structure_constants(n)
            table = len(dump_structure_constants(rows).splitlines()) - 1
        except BasisViolation as exc:
            table = f"BasisViolation: {exc}"
        run.check("sc-table", f"structure constants n={n}", len(B) ** 2, table)


def _counts(run: _Run, n: int, rng: random.Random, budget: int) -> None:
    c = count(n)
    sizes = {
        "T": len(enumerate_connectors(n, Filter.ALL)),
        "T0": len(enumerate_connectors(n, Filter.UNDECORATED)),
        "Teq": len(enumerate_connectors(n, Filter.HORIZONTAL)),
        "T0eq": len(enumerate_connectors(n, Filter.HORIZONTAL_UNDECORATED)),
        "d": len(basis(n, Mode.STRICT)),
        "ext": len(basis(n, Mode.EXTENDED)),
    }
    for key, val in sizes.items():
        run.check(key, f"enumerate n={n}", c[key], val)
    run.check("d-sum", "T + Teq + T0eq", c["d"], c["T"] + c["Teq"] + c["T0eq"])
    run.check("d-closed", f"dimension({n})", c["d"], dimension(n))
    run.check("d-elements", "iter_basis_elements", c["d"], sum(1 for _ in iter_basis_elements(n)))
    horiz = plain_horiz = 0
    bad = []
    for conn in enumerate_connectors(n):
        h, plain, _ = classify(conn)
        horiz += h
        plain_horiz += h and plain
        if conn.n_decorated % 2 or make_connector(n, conn.pairs) != conn:
            bad.append(str(conn))
    run.check("classify-Teq", "classify over T", c["Teq"], horiz)
    run.check("classify-T0eq", "classify over T", c["T0eq"], plain_horiz)
    run.check("canonical", "rebuild from pairs", [], bad[:5])


def _roundtrip(run: _Run, n: int, rng: random.Random, budget: int) -> None:
    B = basis(n)
    chosen = list(enumerate(B)) if len(B) <= budget else [(k, B[k]) for k in sorted(rng.sample(range(len(B)), budget))]
    for k, bd in chosen:
        try:
            got = str(nu(nu_inverse(bd)))
        except ValueError as exc:
            got = f"{type(exc).__name__}: {exc}"
        run.check(str(k), str(bd), str(_elem(bd)), got)
    for k, bd in chosen[: min(len(chosen), 300)]:
        el = _elem(bd)
        m = nu_inverse(bd)
        text = format_word(m.word())
        run.check(f"lit{k}", str(m), el, eval_word(n, parse_word(text)))
        run.check(f"elem{k}", str(el), el, AlgebraElement.parse(str(el)))
        run.check(f"conn{k}", str(bd.conn), bd.conn, Connector.parse(str(bd.conn)))


def _pi_oracle(run: _Run, n: int, rng: random.Random, budget: int) -> None:
    B = basis(n)
    idx = {bd: k for k, bd in enumerate(B)}
    pairs = itertools.product(B, repeat=2) if n <= 3 else _sample(rng, B, 2, budget)
    for a, b in pairs:
        ea, eb = _elem(a), _elem(b)
        (pa, ca), = pi_el(ea).terms.items()
        (pb, cb), = pi_el(eb).terms.items()
        loops, conn = typeA_oracle_product(pa.conn, pb.conn)
        want = AlgebraElement.from_diagram(conn, coeff=(ca * cb).shift(loops))
        run.check(f"{idx[a]},{idx[b]}", f"({a}) ({b})", want, pi_el(ea * eb))


def _opposition(run: _Run, n: int, rng: random.Random, budget: int) -> None:
    B = basis(n)
    idx = {bd: k for k, bd in enumerate(B)}
    for a, b in _sample(rng, B, 2, budget):
        ea, eb = _elem(a), _elem(b)
        run.check(
            f"anti[{idx[a]},{idx[b]}]",
            f"({a}) ({b})",
            opposition_el(eb) * opposition_el(ea),
            opposition_el(ea * eb),
        )
    elems = group_elements(n) if n <= 4 else [_random_perm(rng, n) for _ in range(min(budget, 200))]
    for w in elems:
        word = reduced_word(w)
        inv_word = reduced_word(w.inverse())
        got = opposition_el(eval_word(n, parse_word(" ".join(f"r{k}" for k in word))))
        want = eval_word(n, parse_word(" ".join(f"r{k}" for k in inv_word)))
        run.check(f"perm{w}", f"op(nu({w}))", want, got)


def _random_perm(rng: random.Random, n: int) -> SignedPermutation:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(n - 1)]
    signs.append(1 if signs.count(-1) % 2 == 0 else -1)
    return SignedPermutation([p * s for p, s in zip(perm, signs)])


def _pole_flip(run: _Run, n: int, rng: random.Random, budget: int) -> None:
    flip = {1: 2, 2: 1}
    for i in range(1, n + 1):
        j = flip.get(i, i)
        run.check(f"r{i}", f"flip(r{i})", gen_r(j, n), pole_flip_el(gen_r(i, n)))
        run.check(f"e{i}", f"flip(e{i})", gen_e(j, n), pole_flip_el(gen_e(i, n)))
    B = basis(n)
    idx = {bd: k for k, bd in enumerate(B)}
    before = len(run.report.failures)
    hom_cases = 0
    for a, b in _sample(rng, B, 2, budget):
        ea, eb = _elem(a), _elem(b)
        hom_cases += 1
        run.check(
            f"hom[{idx[a]},{idx[b]}]",
            f"({a}) ({b})",
            pole_flip_el(ea) * pole_flip_el(eb),
            pole_flip_el(ea * eb),
        )
    bad = sum(f.case_id.startswith("hom[") for f in run.report.failures[before:])
    status = "PASS" if bad == 0 else "FAIL"
    run.report.notes.append(f"pole_flip homomorphism: {status} ({hom_cases - bad}/{hom_cases} sampled products)")


def _extended(run: _Run, n: int, rng: random.Random, budget: int) -> None:
    ext = Mode.EXTENDED
    e1 = gen_e(1, n, ext)
    e2 = gen_e(2, n, ext)
    r2 = gen_r(2, n, ext)
    delta = LaurentPoly.monomial(1)
    xi = eval_word(n, parse_word("xi"), ext)
    theta = eval_word(n, parse_word("theta"), ext)
    run.check("xi-e1", "xi e1 = d r2 e1", (r2 * e1).scale(delta), xi * e1)
    run.check("theta-e1", "theta e1 = d e1 e2", (e1 * e2).scale(delta), theta * e1)
    run.check("ext-count", f"extended basis n={n}", count(n)["ext"], len(basis(n, ext)))
    B = basis(n, ext)
    idx = {bd: k for k, bd in enumerate(B)}
    triples = itertools.product(B, repeat=3) if len(B) ** 3 <= budget else _sample(rng, B, 3, min(budget, 2000))
    for a, b, c in triples:
        ea, eb, ec = _elem(a, ext), _elem(b, ext), _elem(c, ext)
        run.check(f"assoc[{idx[a]},{idx[b]},{idx[c]}]", f"({a}) ({b}) ({c})", (ea * eb) * ec, ea * (eb * ec))


SUITES: dict[str, Callable[[_Run, int, random.Random, int], None]] = {
    "relations": _relations,
    "lemma-f": _lemma_f,
    "remark-v": _remark_v,
    "remark-vi": _remark_vi,
    "associativity": _assoc,
    "closure": _closure,
    "counts": _counts,
    "roundtrip": _roundtrip,
    "pi-oracle": _pi_oracle,
    "opposition": _opposition,
    "pole-flip": _pole_flip,
    "extended": _extended,
}


def run_suite(name: str, n: int, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuite(f"UnknownSuite: {name!r} (known: {', '.join(SUITES)})")
    if budget < 1:
        raise BudgetExceeded(f"BudgetExceeded: budget {budget} allows no cases")
    if n < 2:
        raise ValueError(f"suites need n >= 2, got {n}")
    report = SuiteReport(name, n, seed)
    start = time.perf_counter()
    SUITES[name](_Run(report), n, random.Random(seed), budget)
    report.wall_time = time.perf_counter() - start
    return report
