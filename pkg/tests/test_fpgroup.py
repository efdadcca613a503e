import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zariski.data import load_presentation, load_script
from zariski.fpgroup import (
    Presentation,
    ScriptError,
    TietzeError,
    WordSyntaxError,
    abelianize,
    canonical_cyclic,
    certified_rewrite,
    commutator,
    cyclic_reduce,
    determinant,
    format_word,
    free_reduce,
    inverse,
    is_target_form,
    matmul,
    mul,
    parse_word,
    relator_template,
    same_relator,
    smith_normal_form,
    solve_for,
    substitute,
    tangency_word,
    tietze_eliminate,
    verify_simplification,
)

a, b, c = (((g, 1),) for g in ("a", "b", "c"))

words = st.lists(st.tuples(st.sampled_from("abc"), st.sampled_from((1, -1))), max_size=12).map(tuple)


# words ------------------------------------------------------------------------------

def test_free_reduction():
    assert free_reduce((("a", 1), ("b", 1), ("b", -1), ("a", -1))) == ()
    assert mul(a, inverse(a), b) == b


@given(words, words)
def test_free_group_laws(u, v):
    assert mul(u, inverse(u)) == ()
    assert inverse(mul(u, v)) == mul(inverse(v), inverse(u))
    assert same_relator(u, inverse(u))
    assert same_relator(mul(u, v), mul(v, u))
    assert canonical_cyclic(canonical_cyclic(u)) == canonical_cyclic(u)


def test_parse_word_syntax():
    assert parse_word("a b a^-1 b^-1") == commutator(a, b)
    assert parse_word("[a, b]") == commutator(a, b)
    assert parse_word("{a, b}") == tangency_word(a, b)
    assert parse_word("a b = b a") == commutator(a, b)
    assert parse_word("(a b)^2") == mul(a, b, a, b)
    assert parse_word("a^(-2)") == inverse(mul(a, a))
    assert parse_word("e") == ()
    assert parse_word("alpha' beta", ["alpha'", "beta"]) == (("alpha'", 1), ("beta", 1))
    with pytest.raises(WordSyntaxError):
        parse_word("a d", "abc")
    with pytest.raises(WordSyntaxError):
        parse_word("a $")


@given(words)
def test_format_parse_round_trip(w):
    w = free_reduce(w)
    assert parse_word(format_word(w)) == w


def test_relator_templates():
    assert relator_template("node", a, b) == [commutator(a, b)]
    assert relator_template("tangency", a, b) == [tangency_word(a, b)]
    assert relator_template("branch", a, b) == [mul(a, inverse(b))]
    r1, r2 = relator_template("triple", a, b, c)
    assert r1 == mul(a, b, c, inverse(mul(c, a, b)))
    assert r2 == mul(a, b, c, inverse(mul(b, c, a)))
    assert relator_template("projective", a, b, c) == [mul(a, b, c)]
    with pytest.raises(ValueError):
        relator_template("node", a)
    with pytest.raises(ValueError):
        relator_template("cusp", a, b)


# Smith normal form ------------------------------------------------------------------

def test_snf_known_example():
    res = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert res.diagonal == [2, 6, 12]


matrices = st.integers(1, 5).flatmap(lambda m: st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=200)
@given(matrices)
def test_snf_properties(A):
    res = smith_normal_form(A)
    m, n = len(A), len(A[0])
    assert matmul(matmul(res.U, A), res.V) == res.D
    assert abs(determinant(res.U)) == 1 and abs(determinant(res.V)) == 1
    for i in range(m):
        for j in range(n):
            if i != j:
                assert res.D[i][j] == 0
    diag = res.diagonal
    assert all(d >= 0 for d in diag)
    for d1, d2 in zip(diag, diag[1:]):
        assert (d2 == 0) if d1 == 0 else d2 % d1 == 0


def test_determinant():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[0, 1, 0], [1, 0, 0], [0, 0, 5]]) == -5
    assert determinant([]) == 1


# presentations ------------------------------------------------------------------

def test_abelianize_examples():
    p = Presentation.from_strings("ab", [("r", "a^2"), ("s", "[a, b]")])
    assert abelianize(p) == (1, [2])
    free = Presentation.from_strings("abc", [])
    assert abelianize(free) == (3, [])


@pytest.mark.parametrize("name", ["pi1-C1", "pi1-C3"])
def test_embedded_presentations_abelianize_to_z3(name):
    assert abelianize(load_presentation(name)) == (3, [])


def test_undeclared_generator():
    from zariski.fpgroup import Relator

    with pytest.raises(TietzeError):
        Presentation(("a",), (Relator("r", (("b", 1),)),))


def test_solve_and_substitute():
    w = parse_word("a b c^-1")
    assert solve_for(w, "b") == parse_word("a^-1 c")
    assert solve_for(parse_word("a b^-1 c"), "b") == parse_word("c a")
    with pytest.raises(TietzeError):
        solve_for(parse_word("a b a"), "a")
    assert substitute(parse_word("a b^-1"), "b", parse_word("a c")) == parse_word("a c^-1 a^-1")


def test_tietze_elimination():
    p = Presentation.from_strings("abc", [("def", "c = a b"), ("r", "[c, a]")])
    q = tietze_eliminate(p, "c", "def")
    assert q.generators == ("a", "b")
    assert same_relator(q.relator("r").word, commutator(mul(a, b), a))
    assert q.definitions["c"] == mul(a, b)
    assert abelianize(q) == abelianize(p) == (2, [])


def test_certified_rewrite():
    rule = commutator(a, b)
    assert certified_rewrite(mul(a, b, c), rule, mul(a, b), mul(b, a)) == mul(b, a, c)
    with pytest.raises(TietzeError):
        certified_rewrite(mul(a, b, c), commutator(a, c), mul(a, b), mul(b, a))
    with pytest.raises(TietzeError):
        certified_rewrite(mul(c, c), rule, mul(a, b), mul(b, a))


# scripts ----------------------------------------------------------------------------

@pytest.mark.parametrize("name", ["pi1-C1-script", "pi1-C3-script"])
def test_scripts_reach_commutator_presentation(name):
    p, moves = load_script(name)
    res = verify_simplification(p, moves)
    assert res.passed, res.error
    assert is_target_form(res.presentation)
    assert res.presentation.generators == ("alpha", "beta", "gamma")
    assert len(res.steps) == len(moves)
    assert sum(s.certificates for s in res.steps) > 0


def test_truncated_script_fails():
    p, moves = load_script("pi1-C3-script")
    res = verify_simplification(p, moves[:-1])
    assert res.verdict == "FAIL" and res.error is None
    assert not is_target_form(res.presentation)


def test_bad_move_is_reported_with_step():
    p, moves = load_script("pi1-C3-script")
    bad = moves[:4] + [{"op": "delete", "target": "7C2-5"}]
    res = verify_simplification(p, bad)
    assert res.verdict == "FAIL"
    assert res.error.startswith("step 5 (delete)")


def test_move_changing_abelianization_is_rejected():
    p = Presentation.from_strings("ab", [("r", "[a, b]"), ("s", "a b a^-1 b^-1")])
    res = verify_simplification(p, [{"op": "add_generator", "gen": "c", "word": "a", "label": "d"},
                                    {"op": "delete", "target": "d"}])
    assert res.verdict == "FAIL"
    assert "step 2" in res.error


def test_script_error_fields():
    err = ScriptError(3, {"op": "collect"}, "boom")
    assert err.step == 3 and str(err) == "step 3 (collect): boom"


def test_cyclic_reduce():
    assert cyclic_reduce(parse_word("a b a^-1")) == b
