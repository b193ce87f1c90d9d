import random
from dataclasses import replace

import pytest

from brauerd.algebra import AlgebraElement, BasisDiagram, Mode, basis
from brauerd.connectors import Connector, strip
from brauerd.laurent import LambdaClass, LaurentPoly
from brauerd.normal_forms import (
    DELTA,
    E,
    ESTAR,
    EBETA,
    R,
    RBETA,
    XI,
    IndexOutOfRange,
    Malformed,
    ModeViolation,
    Monomial,
    NotBasis,
    e_connector,
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
from brauerd.weyl import AdmissibleClass, Root, Variant

d = LaurentPoly.monomial


def single(cls, conn, coeff=LaurentPoly.const(1)):
    return AlgebraElement(conn.n, [(BasisDiagram.make(cls, conn), coeff)])


def test_generator_connectors():
    assert gen_r(2, 2) == AlgebraElement.from_diagram(Connector(2, [(1, -2, 0), (2, -1, 0)]))
    assert gen_e(1, 2) == AlgebraElement.from_diagram(Connector(2, [(1, 2, 1), (-1, -2, 1)]))
    assert gen_r_beta(Root.parse("e2+e1"), 4) == gen_r(1, 4)
    assert gen_e_beta(Root.parse("e4-e3"), 4) == gen_e(4, 4)
    assert gen_r_beta(Root.parse("e3+e1"), 3) == AlgebraElement.from_diagram(
        Connector(3, [(1, -3, 1), (3, -1, 1), (2, -2, 0)])
    )
    assert gen_e_star(2, 3) == gen_e_beta(Root.parse("e2+e1"), 3)


def test_conjugated_generator():
    assert eval_word(3, [R(2), E(2), R(2)]) == gen_e(2, 3)
    got = eval_word(3, [R(3), E(2), R(3)])
    assert got == gen_e_beta(Root.parse("e3-e1"), 3)


def test_generator_errors():
    with pytest.raises(IndexOutOfRange):
        gen_r(4, 3)
    with pytest.raises(IndexOutOfRange):
        gen_e_star(1, 3)
    with pytest.raises(ModeViolation):
        eval_word(2, [XI])
    with pytest.raises(Malformed):
        parse_word("e1 q7")


def test_word_grammar_roundtrip():
    text = "r2 e1 e*3 r[e3+e1] e[e3-e1] xi theta d^-1"
    word = parse_word(text)
    assert word == [R(2), E(1), ESTAR(3), RBETA(Root(1, 3, True)), EBETA(Root(1, 3, False)), XI, parse_word("theta")[0], DELTA(-1)]
    assert format_word(word) == text


def test_eval_examples():
    assert eval_word(3, []) == AlgebraElement.identity(3)
    e12 = eval_word(2, [E(1), E(2)])
    assert e12 == single(LambdaClass.THETA, strip(e_connector(Root(1, 2, False), 2)), d(-1))


def test_nu_examples():
    assert nu(Monomial(3, (), AdmissibleClass(0), 0, (), ())) == AlgebraElement.identity(3)
    plain = e_connector(Root(1, 2, False), 2)
    m = Monomial(2, (), AdmissibleClass(1), 1, (), ())
    assert nu(m) == single(LambdaClass.XI, plain, d(-1))
    m = Monomial(2, (), AdmissibleClass(1, Variant.YSTAR), 0, (), ())
    assert nu(m) == single(LambdaClass.THETA, plain, d(-1))


def test_monomial_malformed():
    with pytest.raises(Malformed):
        nu(Monomial(3, (), AdmissibleClass(0), 1, (), ()))
    with pytest.raises(Malformed):
        nu(Monomial(4, (), AdmissibleClass(1), 0, (3,), ()))


def test_nu_inverse_examples():
    m = nu_inverse(BasisDiagram(LambdaClass.ONE, Connector.identity(3)))
    assert m.cls.t == 0 and not (m.u_word or m.z0_word or m.v_word)
    m = nu_inverse(gen_e(2, 4))
    assert m.cls == AdmissibleClass(1) and m.k_star == 0
    assert nu(m) == gen_e(2, 4)
    target = single(LambdaClass.XI, e_connector(Root(3, 4, False), 4), d(-1))
    m = nu_inverse(BasisDiagram(LambdaClass.XI, e_connector(Root(3, 4, False), 4)))
    assert m.k_star == 1 and m.delta_exp == 1
    assert nu(replace(m, delta_exp=0)) == target


def test_nu_inverse_rejects():
    with pytest.raises(NotBasis):
        nu_inverse(gen_e(2, 3).scale(2))
    with pytest.raises(NotBasis):
        nu_inverse(BasisDiagram(LambdaClass.XI, Connector.identity(3)))


@pytest.mark.parametrize("n", [2, 3])
def test_roundtrip_complete(n):
    for bd in basis(n):
        assert nu(nu_inverse(bd)) == AlgebraElement(n, [(bd, LaurentPoly.const(1))])


def test_roundtrip_sampled_n5():
    rng = random.Random(11)
    for bd in rng.sample(basis(5), 150):
        assert nu(nu_inverse(bd)) == AlgebraElement(5, [(bd, LaurentPoly.const(1))])


def test_ystar_has_no_k_star():
    bd = BasisDiagram(LambdaClass.THETA, e_connector(Root(2, 3, False), 3))
    m = nu_inverse(bd)
    assert m.cls.variant is Variant.YSTAR and m.k_star == 0
