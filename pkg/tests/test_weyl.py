import itertools

import pytest

from brauerd.weyl import (
    AdmissibleClass,
    BadVariant,
    NotAdmissible,
    NotOrthogonal,
    OddNegatives,
    Root,
    SignedPermutation,
    Variant,
    act,
    admissible_Y,
    group_elements,
    length,
    mate,
    orbit_classify,
    orthogonal,
    positive_roots,
    reduced_word,
    reflection,
    simple_reflection,
    word_to_perm,
)


def test_root_literals():
    assert str(Root(1, 2, True)) == "e2+e1"
    assert Root.parse("e3-e1") == Root(1, 3, False)


def test_mate():
    assert mate(Root.parse("e2-e1")) == Root.parse("e2+e1")
    for r in positive_roots(4):
        assert mate(mate(r)) == r
        assert orthogonal(r, mate(r))


def test_positive_root_count():
    assert [len(positive_roots(n)) for n in (2, 3, 4, 5)] == [2, 6, 12, 20]


def test_act_examples():
    ident = SignedPermutation.identity(3)
    r = Root.parse("e2+e1")
    assert act(ident, r) == r
    assert act(reflection(Root.parse("e2-e1"), 3), r) == r
    assert act(reflection(Root.parse("e3-e2"), 3), Root.parse("e2-e1")) == Root.parse("e3-e1")


def test_word_to_perm_examples():
    assert word_to_perm([2], 3) == SignedPermutation([2, 1, 3])
    assert word_to_perm([1], 3) == SignedPermutation([-2, -1, 3])
    assert SignedPermutation.parse("[2 -1 -3]") == SignedPermutation([2, -1, -3])


def test_odd_negatives():
    with pytest.raises(OddNegatives):
        SignedPermutation([-1, 2, 3])


def _brute_length(w: SignedPermutation, n: int) -> int:
    return sum(1 for r in positive_roots(n) if _negative_image(w, r))


def _negative_image(w, r):
    vec = [0] * (w.n + 1)
    for idx, coeff in ((r.j, 1), (r.i, 1 if r.plus else -1)):
        y = w(idx)
        vec[abs(y)] += coeff if y > 0 else -coeff
    top = max(k for k in range(len(vec)) if vec[k])
    return vec[top] < 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_length_and_reduced_word_bruteforce(n):
    elems = group_elements(n)
    assert len(elems) == 2 ** (n - 1) * [1, 1, 2, 6, 24][n]
    for w in elems:
        word = reduced_word(w)
        assert word_to_perm(word, n) == w
        assert len(word) == length(w) == _brute_length(w, n)


def test_length_examples():
    assert length(SignedPermutation.identity(4)) == 0
    assert len(reduced_word(word_to_perm([2, 3, 2], 4))) == 3


def test_simple_reflections_are_involutions():
    for k in range(1, 5):
        s = simple_reflection(k, 4)
        assert (s * s).is_identity()


def test_admissible_examples():
    assert admissible_Y(4, 1) == [Root.parse("e4-e3")]
    assert admissible_Y(4, 2) == [Root.parse("e4-e3"), Root.parse("e2-e1")]
    assert admissible_Y(4, 2, Variant.YPRIME) == [Root.parse("e4-e3"), Root.parse("e2+e1")]
    with pytest.raises(BadVariant):
        admissible_Y(5, 2, Variant.YPRIME)


def test_orbit_classify_examples():
    cls, w = orbit_classify([Root.parse("e4-e3")], 4)
    assert cls == AdmissibleClass(1) and w.is_identity()
    cls, w = orbit_classify([Root.parse("e2+e1"), Root.parse("e4+e3")], 4)
    assert cls == AdmissibleClass(2)
    cls, w = orbit_classify([Root.parse("e4-e3"), Root.parse("e2+e1")], 4)
    assert cls == AdmissibleClass(2, Variant.YPRIME) and w.is_identity()


def test_orbit_classify_errors():
    with pytest.raises(NotOrthogonal):
        orbit_classify([Root.parse("e2-e1"), Root.parse("e3-e2")], 3)
    with pytest.raises(NotAdmissible):
        orbit_classify([Root.parse("e2-e1"), Root.parse("e2+e1"), Root.parse("e4-e3")], 4)


def _orthogonal_sets(n):
    roots = positive_roots(n)
    for t in range(1, n // 2 + 1):
        for S in itertools.combinations(roots, t):
            if all(orthogonal(a, b) for a, b in itertools.combinations(S, 2)):
                if len({x for r in S for x in (r.i, r.j)}) == 2 * t:
                    yield S


def test_orbit_classify_bruteforce_n4():
    n = 4
    elems = group_elements(n)
    orbit = {}
    for cls in [AdmissibleClass(1), AdmissibleClass(2), AdmissibleClass(2, Variant.YPRIME)]:
        base = admissible_Y(n, cls.t, cls.variant)
        for w in elems:
            orbit.setdefault(frozenset(act(w, r) for r in base), cls)
    for S in _orthogonal_sets(n):
        cls, w = orbit_classify(S, n)
        assert cls == orbit[frozenset(S)]
        image = {act(w, r) for r in admissible_Y(n, cls.t, cls.variant)}
        assert image == set(S)
