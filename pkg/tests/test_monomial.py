import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcmlattice import ONE, Monomial, MonomialParseError, NotDivisibleError, gcd_all, lcm_all

# -- parsing and rendering ----------------------------------------------------


@pytest.mark.parametrize(
    "text,exps",
    [
        ("1", {}),
        ("a", {"a": 1}),
        ("a^3", {"a": 3}),
        ("a*b", {"a": 1, "b": 1}),
        ("a^2*c*d", {"a": 2, "c": 1, "d": 1}),
        ("x_1^10*x_1", {"x_1": 11}),  # repeats accumulate
        ("a2*a10*a1", {"a1": 1, "a2": 1, "a10": 1}),
    ],
)
def test_parse(text, exps):
    m = Monomial.parse(text)
    assert dict(m.items()) == exps


@pytest.mark.parametrize(
    "text,pos",
    [
        ("", 0),
        ("a^0", 2),  # exponents are positive
        ("a^", 2),
        ("a**b", 2),
        ("2a", 0),
        ("a^1b", 3),
        ("a*", 2),
        ("a b", 1),
        ("a^01", 2),  # no leading zeros
    ],
)
def test_parse_rejects(text, pos):
    with pytest.raises(MonomialParseError) as exc:
        Monomial.parse(text)
    assert exc.value.position == pos


def test_render_canonical_order():
    # atom-style names numerically first, others after, lexicographically
    m = Monomial({"b": 1, "a10": 2, "a2": 1, "_t": 3})
    assert str(m) == "a2*a10^2*_t^3*b"
    assert str(Monomial()) == "1"
    assert str(Monomial({"x": 1})) == "x"  # ^1 suppressed


@given(
    st.dictionaries(
        st.from_regex(r"[a-z][a-z0-9]{0,2}", fullmatch=True),
        st.integers(min_value=1, max_value=9),
        max_size=5,
    )
)
def test_parse_render_roundtrip(exps):
    m = Monomial(exps)
    assert Monomial.parse(str(m)) == m


# -- arithmetic ---------------------------------------------------------------


def test_multiplication_and_division():
    a = Monomial.parse("a^2*b")
    b = Monomial.parse("b*c")
    assert str(a * b) == "a^2*b^2*c"
    assert (a * b) / b == a
    assert a / a == ONE
    with pytest.raises(NotDivisibleError):
        a / b


def test_lcm_gcd():
    a = Monomial.parse("a^2*b")
    b = Monomial.parse("a*b^3*c")
    assert str(a.lcm(b)) == "a^2*b^3*c"
    assert str(a.gcd(b)) == "a*b"
    assert a.gcd(Monomial.parse("d")) == ONE


def test_divides():
    assert Monomial.parse("a*b").divides(Monomial.parse("a^2*b*c"))
    assert not Monomial.parse("a^3").divides(Monomial.parse("a^2*b"))
    assert ONE.divides(Monomial.parse("z"))


def test_empty_folds_are_unit():
    assert lcm_all([]) == ONE
    assert gcd_all([]) == ONE
    ms = [Monomial.parse(s) for s in ("a^2*b", "a*c", "a^3")]
    assert str(lcm_all(ms)) == "a^3*b*c"
    assert str(gcd_all(ms)) == "a"


def test_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        Monomial({"a": 0})
    with pytest.raises(ValueError):
        Monomial({"a": -1})
    with pytest.raises(ValueError):
        Monomial({"9x": 1})
    with pytest.raises(ValueError):
        Monomial({"a": True})


def test_value_semantics():
    a1 = Monomial.parse("a*b^2")
    a2 = Monomial((("b", 2), ("a", 1)))
    assert a1 == a2 and hash(a1) == hash(a2)
    assert a1 != Monomial.parse("a*b")
    assert len({a1, a2}) == 1


# -- algebraic laws, property-checked ----------------------------------------

monomials = st.dictionaries(
    st.sampled_from(["a", "b", "c", "d"]),
    st.integers(min_value=1, max_value=4),
    max_size=4,
).map(Monomial)


@given(monomials, monomials)
def test_lcm_gcd_are_commutative(x, y):
    assert x.lcm(y) == y.lcm(x)
    assert x.gcd(y) == y.gcd(x)


@given(monomials, monomials)
def test_gcd_times_lcm_is_product(x, y):
    assert x.gcd(y) * x.lcm(y) == x * y


@given(monomials, monomials)
def test_divisibility_bounds(x, y):
    assert x.divides(x.lcm(y))
    assert x.gcd(y).divides(x)
    assert x.divides(x * y)


@given(monomials, monomials, monomials)
def test_lcm_associative(x, y, z):
    assert x.lcm(y).lcm(z) == x.lcm(y.lcm(z))
