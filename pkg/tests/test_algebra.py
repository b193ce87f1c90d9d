import random

import pytest
from hypothesis import given, settings, strategies as st

from brauerd.algebra import (
    AlgebraElement,
    BasisDiagram,
    BasisViolation,
    Mode,
    ModeMismatch,
    SizeMismatch,
    add,
    basis,
    dump_structure_constants,
    equals,
    multiply,
    multiply_basis,
    opposition_el,
    pi_el,
    pole_flip_el,
    scale,
    structure_constants,
    trace,
)
from brauerd.connectors import Connector, opposition, strip
from brauerd.laurent import ONE_POLY, LambdaClass, LaurentPoly
from brauerd.normal_forms import e_connector, eval_word, gen_e, gen_e_beta, gen_r, gen_r_beta, parse_word
from brauerd.verification.suites import f_connector
from brauerd.weyl import Root, mate

d = LaurentPoly.monomial


def xi_d(a: AlgebraElement) -> AlgebraElement:
    (bd, c), = a.terms.items()
    return AlgebraElement(a.n, [(BasisDiagram.make(LambdaClass.XI, bd.conn), c * d(-1))], a.mode)


def test_basis_sizes():
    assert [len(basis(n)) for n in (2, 3, 4)] == [9, 105, 1569]
    assert [len(basis(n, Mode.EXTENDED)) for n in (2, 3, 4)] == [15, 135, 1785]


def test_basis_check():
    ident = Connector.identity(2)
    with pytest.raises(BasisViolation):
        BasisDiagram(LambdaClass.XI, ident).check(Mode.STRICT)
    BasisDiagram(LambdaClass.XI, ident).check(Mode.EXTENDED)
    assert BasisDiagram.make(LambdaClass.THETA, e_connector(Root(1, 2, True), 2)).conn.undecorated


@pytest.mark.parametrize("n", [2, 3, 4])
def test_r_e_absorption(n):
    assert gen_r(2, n) * gen_e(2, n) == gen_e(2, n)
    assert gen_r(1, n) * gen_e(1, n) == gen_e(1, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_e_squared(n):
    e = gen_e(2, n)
    assert e * e == e.scale(d(1))
    assert scale(d(1), e) == multiply(e, e)


def test_mate_crossing_gives_xi():
    alpha = Root(1, 2, False)
    got = gen_r_beta(mate(alpha), 2) * gen_e_beta(alpha, 2)
    assert got == xi_d(gen_e_beta(alpha, 2))


def test_e1_e2_gives_theta():
    got = gen_e(1, 2) * gen_e(2, 2)
    want = AlgebraElement(2, [(BasisDiagram.make(LambdaClass.THETA, strip(e_connector(Root(1, 2, False), 2))), d(-1))])
    assert got == want
    assert str(got) == "theta*(1d^-1) ; n:2 {1 2} {-1 -2}"


@pytest.mark.parametrize("i,j,k", [(1, 2, 3), (1, 3, 2), (2, 3, 1)])
def test_lemma_f_cases(i, j, k):
    n = 3
    beta = Root(i, j, False)
    f = AlgebraElement.from_diagram(f_connector(n, i, j, k))
    a_i = Root(min(k, i), max(k, i), False)
    a_j = Root(min(k, j), max(k, j), False)
    assert gen_r_beta(a_i, n) * gen_r_beta(mate(a_i), n) * gen_e_beta(beta, n) == f
    assert gen_r_beta(a_j, n) * gen_r_beta(mate(a_j), n) * gen_e_beta(beta, n) == xi_d(f)


def test_sum_times_basis():
    e, r = gen_e(2, 3), gen_r(2, 3)
    assert (e + r) * e == e.scale(d(1) + 1)
    assert add(e, AlgebraElement.zero(3)) == e
    assert AlgebraElement.zero(3) * e == AlgebraElement.zero(3)
    assert AlgebraElement.identity(3) * e == e


def test_equals_ignores_order():
    e, r = gen_e(2, 3), gen_r(1, 3)
    assert equals(e + r, r + e)
    assert (e - e).is_zero()


def test_mismatches():
    with pytest.raises(SizeMismatch):
        gen_e(2, 3) * gen_e(2, 2)
    with pytest.raises(ModeMismatch):
        gen_e(2, 2) + gen_e(2, 2, Mode.EXTENDED)


def test_element_parse_roundtrip():
    el = gen_e(1, 3) * gen_e(2, 3) + gen_r(3, 3).scale(LaurentPoly({0: -1, 2: 2}))
    assert AlgebraElement.parse(str(el)) == el
    assert AlgebraElement.parse("0", n=3).is_zero()


def test_opposition_examples():
    n = 4
    assert opposition_el(gen_e(1, n) * gen_e(3, n)) == gen_e(3, n) * gen_e(1, n)
    w = eval_word(n, parse_word("r1 r2 r3 r4"))
    w_inv = eval_word(n, parse_word("r4 r3 r2 r1"))
    assert opposition_el(w) == w_inv


def test_pi_examples():
    assert pi_el(gen_e(1, 3)) == gen_e(2, 3)
    f = AlgebraElement.from_diagram(f_connector(3, 1, 2, 3))
    assert pi_el(xi_d(f)) == AlgebraElement.from_diagram(strip(f_connector(3, 1, 2, 3)))


def test_pole_flip_examples():
    n = 4
    assert pole_flip_el(gen_r(1, n)) == gen_r(2, n)
    assert pole_flip_el(gen_r(3, n)) == gen_r(3, n)
    assert pole_flip_el(gen_e(1, n)) == gen_e(2, n)


def test_trace_loop_counts():
    e = e_connector(Root(1, 2, False), 3)
    t = trace(e, e)
    assert t.plain_loops == 1 and t.decorated_loops == 0
    r = Connector.parse("n:3 {1 -2} {2 -3} {3 -1}")
    assert trace(r, r).plain_loops == 0


def test_structure_constants_n2():
    B = basis(2)
    rows = structure_constants(2)
    assert len(rows) == 81
    ident = B.index(BasisDiagram(LambdaClass.ONE, Connector.identity(2)))
    for i, j, k, e, cls in rows:
        if i == ident:
            assert (k, e, cls) == (j, 0, B[j].cls.token)
    table = {(i, j): (k, e, cls) for i, j, k, e, cls in rows}
    op = {k: B.index(BasisDiagram(bd.cls, opposition(bd.conn))) for k, bd in enumerate(B)}
    for (i, j), (k, e, cls) in table.items():
        assert table[op[j], op[i]] == (op[k], e, cls)


def test_structure_constants_csv_header():
    text = dump_structure_constants(structure_constants(2))
    assert text.splitlines()[0] == "i,j,k,delta_exp,class"


elements3 = st.lists(
    st.tuples(st.sampled_from(basis(3)), st.integers(-3, 3), st.integers(-2, 2)), min_size=0, max_size=3
).map(lambda ts: AlgebraElement(3, [(bd, d(k, c)) for bd, c, k in ts if c]))


@settings(max_examples=60, deadline=None)
@given(elements3, elements3, elements3)
def test_random_elements(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert opposition_el(a * b) == opposition_el(b) * opposition_el(a)
    assert opposition_el(opposition_el(a)) == a
    assert pi_el(a * b) == pi_el(a) * pi_el(b)


def test_multiply_basis_closure_sample():
    rng = random.Random(3)
    B = basis(4)
    for _ in range(300):
        a, b = rng.choice(B), rng.choice(B)
        cls, k, bd = multiply_basis(a, b)
        bd.check(Mode.STRICT)
        AlgebraElement(4, [(BasisDiagram.make(cls, bd.conn), ONE_POLY)])
