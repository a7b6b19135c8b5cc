import json

import pytest

import loopbraid as lb


def test_braid_relation():
    assert lb.equal(lb.BraidWord("s1 s2 s1", 3), lb.BraidWord("s2 s1 s2", 3))
    assert not lb.equal(lb.BraidWord("s1 s1", 2), lb.BraidWord("", 2))


def test_generator_images():
    assert lb.PCAut.sigma(2, 1).images == ["x2", "x2^-1 x1 x2"]
    assert lb.PCAut.tau(2, 2).images == ["x1", "x2^-1"]
    assert lb.evaluate(lb.BraidWord("t1", 2)).signs == [-1, 1]
    assert lb.PCAut.sigma(2, 1)(lb.FreeWord("x1 x2", 2)) == lb.FreeWord("x1 x2", 2)


def test_free_words():
    u = lb.FreeWord("x1 x2", 3)
    assert str(u * lb.FreeWord("x2^-1 x3", 3)) == "x1 x3"
    assert str(lb.FreeWord("x1", 3).conjugate(lb.FreeWord("x2", 3))) == "x2^-1 x1 x2"
    assert len(u * u.inverse()) == 0


def test_words():
    w = lb.BraidWord("r1 r2", 3)
    assert lb.permutation(w) == [2, 3, 1]
    assert str(lb.inverse_word(lb.BraidWord("s1 r2", 3))) == "r2 S1"
    assert lb.is_pure(lb.alpha_word(3, 1, 3))
    assert lb.evaluate(lb.alpha_word(3, 1, 3)) == lb.PCAut.alpha(3, 1, 3)
    assert lb.random_word(4, 9, 3, True) == lb.random_word(4, 9, 3, True)


def test_errors():
    with pytest.raises(lb.ParseError):
        lb.BraidWord("s1 q2", 3)
    with pytest.raises(ValueError):
        lb.PCAut.sigma(3, 3)
    with pytest.raises(ValueError):
        lb.from_word(lb.BraidWord("t1", 2))


def test_search_and_simplify():
    path = lb.search(lb.BraidWord("r1 r1", 2), lb.BraidWord("", 2))
    assert path is not None
    assert json.loads(path.splitlines()[0])["rule"] == "V2"
    assert lb.search(lb.BraidWord("s1", 2), lb.BraidWord("r1", 2), depth=3) is None
    assert str(lb.simplify(lb.BraidWord("s1 S1 r2 r2", 3))) == ""


def test_gauss():
    g = lb.from_word(lb.BraidWord("s1 S2", 3))
    assert g.arrows == [(2, 1, 1), (1, 3, -1)]
    assert lb.GaussDiagram.from_json(g.to_json()) == g
    assert lb.from_word(lb.realize(g)) == g


def test_presentations():
    for name in ("ur", "r", "pur", "plbe"):
        report = lb.verify_presentation(name, 4)
        assert report["pass"], name
        assert all(r["pass"] for r in report["relators"])
