import pytest
from hypothesis import given, settings, strategies as st

from iterwb.harness.terms import gen_redex, gen_term
from iterwb.lam import (
    Abs,
    App,
    Arrow,
    Const,
    EvalError,
    Func,
    Lit,
    ParseError,
    TypeCheckError,
    Var,
    W,
    arrow,
    evaluate,
    infer_type,
    level,
    parse,
    parse_type,
    print_term,
    print_type,
    run,
)
from iterwb.lam.constants import ITER_TYPE, REC_TYPE
from iterwb.lam.syntax import free_vars, is_closed, substitute
from iterwb.words import ResourceExceeded, resource_cap

T1 = arrow(W, W)


def test_parse_examples():
    t = parse(r"\t:W. lmin t '01'")
    assert t == Abs("t", W, App(App(Const("lmin"), Var("t", W)), Lit("01")))
    assert parse("''") == Lit("")
    two = parse(r"\f:W->W. \a:W. f (f a)")
    f, a = Var("f", T1), Var("a", W)
    assert two == Abs("f", T1, Abs("a", W, App(f, App(f, a))))
    assert parse("λt:W. t") == Abs("t", W, Var("t", W))


@pytest.mark.parametrize(
    "text",
    [r"\t:W. lmin t '01'", "''", r"\f:W -> W. \a:W. f (f a)", r"\g:(W -> W) -> W. g app0", "cond '1' (app0 '') ''"],
)
def test_print_round_trip(text):
    t = parse(text)
    assert parse(print_term(t)) == t


def test_printer_minimal_parentheses():
    assert print_term(parse("((lmin '0') ('1'))")) == "lmin '0' '1'"
    assert print_term(parse(r"\f:W->W. \a:W. f (f a)")) == r"\f:W -> W. \a:W. f (f a)"
    assert print_term(Lit("")) == "''"
    assert print_type(parse_type("(W -> W) -> W -> W")) == "(W -> W) -> W -> W"
    assert print_type(parse_type("W -> (W -> W)")) == "W -> W -> W"


def test_comments_and_unicode_arrow():
    t = parse("-- a comment\n\\x:W→W. x -- trailing\n")
    assert infer_type(t) == arrow(T1, T1)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("lmin '0", "1:6:"),
        (r"\x:W. ", "1:7: expected a term"),
        ("foo", "unbound variable"),
        ("iterkx app0", "unknown constant"),
        (r"\lmin:W. lmin", "reserved"),
        ("lmin '2'", ""),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert fragment in str(info.value)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse("app0\n  )")
    assert info.value.line == 2 and info.value.col == 3


def test_types_of_constants():
    assert infer_type(parse(r"\t:W. lmin t '01'")) == T1
    assert infer_type(Const("iter")) == ITER_TYPE
    assert print_type(ITER_TYPE) == "(W -> W) -> W -> W -> W -> W"
    assert print_type(REC_TYPE) == "(W -> W -> W) -> (W -> W) -> W -> W -> W"
    assert print_type(infer_type(Const("iterk3"))) == "(W -> W) -> W -> W -> W"
    assert level(REC_TYPE) == 2 and level(W) == 0 and level(T1) == 1


def test_type_errors():
    with pytest.raises(TypeCheckError) as info:
        infer_type(parse(r"lmin (\t:W. t)"))
    assert "expected W" in str(info.value) and "W -> W" in str(info.value)
    with pytest.raises(TypeCheckError):
        infer_type(parse("'01' '1'"))
    with pytest.raises(TypeCheckError):
        infer_type(Var("x", W))


def test_evaluate_examples():
    assert evaluate(parse(r"(\t:W. lmin t '01') '1'")) == "1"
    assert evaluate(Var("X", W), {"X": "0"}) == "0"
    v = evaluate(parse(r"\t:W. t"))
    assert isinstance(v, Func) and v("01") == "01"
    assert run(r"f (f '0')", {"f": (T1, evaluate(Const("app1")))}) == "011"
    with pytest.raises(EvalError):
        evaluate(Var("y", W))


def test_primitive_constants_evaluate():
    assert run("iter app1 '1111' '' '000'") == "111"
    assert run("jter app1 '11' '' '000'") == "111"
    assert run(r"rec (\d:W. \t:W. app1 t) (\d:W. '1111') '' '00'") == "11"
    assert run("iterk1 app1 '0' '0000'") == "01"
    assert run("jterk0 app1 '0' '000'") == "01"
    assert run("tup2 '1' '0'") == "110100"


def test_resource_guard_in_evaluation():
    selfcat = r"(\x:W. cat x x)"
    nested = "'0'"
    for _ in range(12):
        nested = f"({selfcat} {nested})"
    with resource_cap(1000):
        with pytest.raises(ResourceExceeded, match="resource exceeded: word of length 1024"):
            run(nested)


def test_substitution_avoids_capture():
    body = parse(r"\y:W. cat x y", {"x": W})
    out = substitute(body, "x", Var("y", W))
    assert free_vars(out) == {"y"}
    assert evaluate(out, {"y": "1"})("0") == "10"


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 9))
def test_round_trip_generated(seed):
    t = gen_term(seed, W, 6)
    assert parse(print_term(t)) == t


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 9))
def test_soundness_generated(seed):
    t = gen_term(seed, W, 8)
    assert is_closed(t)
    assert infer_type(t) == W
    assert isinstance(evaluate(t), str)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 9))
def test_beta_preservation(seed):
    r = gen_redex(seed)
    contractum = substitute(r.fun.body, r.fun.var, r.arg)
    assert infer_type(contractum) == W
    assert evaluate(r) == evaluate(contractum)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 9), st.text(alphabet="01", max_size=6))
def test_eta_preservation(seed, word):
    f = gen_term(seed, T1, 5)
    eta = Abs("eta_y", W, App(f, Var("eta_y", W)))
    assert evaluate(App(f, Lit(word))) == evaluate(App(eta, Lit(word)))


def test_higher_order_abstraction_agrees_with_arity_expansion():
    # a level-2 term: its value applied to all arguments equals the body under the extended assignment
    t = parse(r"\g:(W -> W) -> W. \x:W. g (\y:W. cat y x)")
    g = evaluate(parse(r"\h:W -> W. h (h '1')"))
    assert evaluate(t)(g)("0") == "100"
    assert infer_type(t) == arrow(Arrow(T1, W), W, W)
