import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pathhom import (BoundaryMode, Chain, InputError, boundary, concatenate_forms,
                     cross_product, elevation, exterior_differential, is_regular,
                     is_step_like, join_paths, pairing, parse_chain, project_x,
                     project_y)
from pathhom.chains import (NONREGULAR_AUGMENTED, NONREGULAR_TRUNCATED,
                            REGULAR_AUGMENTED, REGULAR_TRUNCATED)

MODES = (REGULAR_TRUNCATED, REGULAR_AUGMENTED, NONREGULAR_TRUNCATED,
         NONREGULAR_AUGMENTED)


def regular_paths(alphabet="abcd", max_grade=5):
    def ok(p):
        return is_regular(tuple(p))
    return st.lists(st.sampled_from(list(alphabet)), min_size=1,
                    max_size=max_grade + 1).filter(ok).map(tuple)


def chains_of(paths, grade):
    """Random chain supported on paths of the given grade."""
    pool = [p for p in paths if len(p) - 1 == grade]
    return st.dictionaries(st.sampled_from(pool),
                           st.builds(Fraction, st.integers(-3, 3), st.integers(1, 2)),
                           min_size=1, max_size=4).map(lambda d: Chain(grade, d))


def random_chain(rng, alphabet, grade, regular=True, n_terms=3):
    terms = {}
    for _ in range(n_terms):
        while True:
            p = tuple(rng.choice(alphabet) for _ in range(grade + 1))
            if not regular or is_regular(p):
                break
        terms[p] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return Chain(grade, terms)


def test_is_regular_examples():
    assert not is_regular(("i", "i"))
    assert is_regular(("i", "j", "i"))
    assert is_regular(())


def test_boundary_examples():
    assert boundary(Chain.of("ij"), NONREGULAR_TRUNCATED) == Chain(0, {("j",): 1, ("i",): -1})
    assert boundary(Chain.of("iji"), REGULAR_TRUNCATED) == Chain(1, {("j", "i"): 1, ("i", "j"): 1})
    assert boundary(Chain.of("iji"), NONREGULAR_TRUNCATED) == Chain(
        1, {("j", "i"): 1, ("i", "i"): -1, ("i", "j"): 1})
    twice = boundary(boundary(Chain.of("abc"), NONREGULAR_TRUNCATED), NONREGULAR_TRUNCATED)
    assert twice.is_zero()
    with pytest.raises(InputError):
        boundary(Chain.of("ii"), REGULAR_TRUNCATED)


def test_boundary_augmentation():
    assert boundary(Chain.of("i"), REGULAR_AUGMENTED) == Chain(-1, {(): 1})
    assert boundary(Chain.of("i"), REGULAR_TRUNCATED).is_zero()


def test_join_examples():
    assert join_paths(Chain.of("ab"), Chain.of("cd")) == Chain.of("abcd")
    assert join_paths(Chain.of("ij"), Chain.of("ji")).is_zero()
    assert join_paths(Chain.of("ij"), Chain.of("ji"), regular=False) == Chain.of("ijji")
    v = Chain(1, {("x", "y"): Fraction(2)})
    assert join_paths(Chain.of(()), v) == v


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_boundary_squares_to_zero(data):
    mode = data.draw(st.sampled_from(MODES))
    grade = data.draw(st.integers(0, 5))
    alphabet = list("abcde")
    terms = data.draw(st.dictionaries(
        st.tuples(*([st.sampled_from(alphabet)] * (grade + 1))),
        st.builds(Fraction, st.integers(-3, 3), st.integers(1, 2)),
        min_size=1, max_size=4))
    if mode.regular:
        terms = {p: c for p, c in terms.items() if is_regular(p)}
    c = Chain(grade, terms)
    assert boundary(boundary(c, mode), mode).is_zero()


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_join_product_rule(data):
    """d(uv) = (du)v + (-1)^{p+1} u dv over the augmented complex."""
    regular = data.draw(st.booleans())
    mode = BoundaryMode(regular=regular, augmented=True)
    p = data.draw(st.integers(-1, 3))
    q = data.draw(st.integers(-1, 3))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    u = random_chain(rng, "abc", p, regular=regular) if p >= 0 else Chain(-1, {(): Fraction(1)})
    v = random_chain(rng, "xyz", q, regular=regular) if q >= 0 else Chain(-1, {(): Fraction(1)})
    left = boundary(join_paths(u, v, regular=regular), mode)
    right = (join_paths(boundary(u, mode), v, regular=regular)
             + Fraction(-1) ** (p + 1) * join_paths(u, boundary(v, mode), regular=regular))
    assert left == right


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_regularization_consistency(data):
    """Regular d of a regular chain = nonregular d with non-regular terms dropped."""
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    grade = data.draw(st.integers(1, 5))
    c = random_chain(rng, "abc", grade, regular=True)
    full = boundary(c, NONREGULAR_TRUNCATED)
    dropped = Chain(grade - 1, {p: v for p, v in full.terms.items() if is_regular(p)})
    assert boundary(c, REGULAR_TRUNCATED) == dropped


def test_pairing_examples():
    assert pairing(Chain.of("ab"), Chain.of("ab")) == 1
    assert pairing(Chain.of("ab"), Chain.of("ba")) == 0
    V = list("abcd")
    one = Chain(0, {(v,): Fraction(1) for v in V})
    d_one = exterior_differential(one, V, regular=False)
    assert d_one.is_zero()
    with pytest.raises(InputError):
        pairing(Chain.of("ab"), Chain.of("a"))


def test_exterior_differential_examples():
    V = list("abc")
    f = Chain(0, {("a",): Fraction(2), ("b",): Fraction(5)})
    df = exterior_differential(f, V, regular=False)
    for i in V:
        for j in V:
            assert df.coefficient((i, j)) == f.coefficient((j,)) - f.coefficient((i,))
    unit = Chain(-1, {(): Fraction(1)})
    de = exterior_differential(unit, V, regular=False)
    assert de == Chain(0, {(v,): 1 for v in V})


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_differential_squares_to_zero(data):
    regular = data.draw(st.booleans())
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    grade = data.draw(st.integers(-1, 3))
    V = list("abc")
    omega = (random_chain(rng, V, grade, regular=regular)
             if grade >= 0 else Chain(-1, {(): Fraction(1)}))
    once = exterior_differential(omega, V, regular=regular)
    assert exterior_differential(once, V, regular=regular).is_zero()


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_stokes_duality(data):
    """(d omega, v) = (omega, dv) with matching regularity and augmentation."""
    regular = data.draw(st.booleans())
    mode = BoundaryMode(regular=regular, augmented=True)
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    grade = data.draw(st.integers(0, 4))
    V = list("abcd")
    omega = (random_chain(rng, V, grade - 1, regular=regular)
             if grade >= 1 else Chain(-1, {(): Fraction(1)}))
    v = random_chain(rng, V, grade, regular=regular)
    assert pairing(exterior_differential(omega, V, regular=regular), v) \
        == pairing(omega, boundary(v, mode))


def test_concatenate_examples():
    assert concatenate_forms(Chain.of("ab"), Chain.of("bc")) == Chain.of("abc")
    assert concatenate_forms(Chain.of("ab"), Chain.of("cd")).is_zero()
    V = list("abc")
    one = Chain(0, {(v,): Fraction(1) for v in V})
    psi = Chain(1, {("a", "b"): Fraction(3), ("c", "a"): Fraction(-2)})
    assert concatenate_forms(one, psi) == psi
    assert concatenate_forms(psi, one) == psi


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_concatenation_leibniz(data):
    """d(phi psi) = (d phi) psi + (-1)^p phi (d psi), regular forms."""
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    p = data.draw(st.integers(0, 2))
    q = data.draw(st.integers(0, 2))
    V = list("abcd")
    phi = random_chain(rng, V, p, regular=True)
    psi = random_chain(rng, V, q, regular=True)
    d = lambda w: exterior_differential(w, V, regular=True)
    left = d(concatenate_forms(phi, psi))
    right = (concatenate_forms(d(phi), psi)
             + Fraction(-1) ** p * concatenate_forms(phi, d(psi)))
    assert left == right


def test_step_helpers_and_elevation():
    z = (("a", 0), ("a", 1))
    assert is_step_like(z) and elevation(z) == 0
    z = (("a", 0), ("b", 0), ("b", 1), ("c", 1), ("c", 2))
    assert is_step_like(z)
    assert project_x(z) == ("a", "b", "c") and project_y(z) == (0, 1, 2)
    assert elevation(z) == 1
    # all-vertical then all-horizontal staircase on a 5 x 6 grid: the full
    # rectangle of 30 cells lies below it
    z = tuple((0, j) for j in range(7)) + tuple((i, 6) for i in range(1, 6))
    assert elevation(z) == 30
    with pytest.raises(InputError):
        elevation((("a", 0), ("b", 1)))
    with pytest.raises(InputError):
        elevation((("a", 0), ("b", 0)), x_size=2, y_size=0)


def test_cross_product_examples():
    e = Chain.of
    ab, abc = e("ab"), e("abc")
    e0, e01 = Chain.of(((0,))), Chain.of((0, 1))
    assert cross_product(ab, e0) == Chain.of((("a", 0), ("b", 0)))
    got = cross_product(ab, e01)
    want = (Chain.of((("a", 0), ("b", 0), ("b", 1)))
            - Chain.of((("a", 0), ("a", 1), ("b", 1))))
    assert got == want
    got = cross_product(abc, e01)
    want = (Chain.of((("a", 0), ("b", 0), ("c", 0), ("c", 1)))
            - Chain.of((("a", 0), ("b", 0), ("b", 1), ("c", 1)))
            + Chain.of((("a", 0), ("a", 1), ("b", 1), ("c", 1))))
    assert got == want


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_cross_product_rule(data):
    """d(u x v) = du x v + (-1)^p u x dv, regular truncated boundary."""
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    p = data.draw(st.integers(0, 3))
    q = data.draw(st.integers(0, 3))
    u = random_chain(rng, "abc", p, regular=True)
    v = random_chain(rng, [0, 1, 2], q, regular=True)
    left = boundary(cross_product(u, v), REGULAR_TRUNCATED)
    du = boundary(u, REGULAR_TRUNCATED)
    dv = boundary(v, REGULAR_TRUNCATED)
    right = Chain.zero(p + q - 1) if p + q == 0 else (
        (cross_product(du, v) if p > 0 else Chain.zero(p + q - 1))
        + (Fraction(-1) ** p * cross_product(u, dv) if q > 0 else Chain.zero(p + q - 1)))
    assert left == right


def test_cross_product_linear_independence(rng):
    """Products e_x x e_y for distinct pairs are linearly independent."""
    from pathhom import SparseMatrix, rank
    for _ in range(20):
        pairs = set()
        while len(pairs) < 4:
            px = tuple(rng.choice("ab") for _ in range(rng.randint(1, 3)))
            py = tuple(rng.choice([0, 1]) for _ in range(rng.randint(1, 3)))
            if is_regular(px) and is_regular(py):
                pairs.add((px, py))
        cols = [dict(cross_product(Chain.of(x), Chain.of(y)).terms)
                for x, y in sorted(pairs)]
        row_keys = sorted({r for c in cols for r in c}, key=repr)
        assert rank(SparseMatrix.from_columns(row_keys, cols)) == len(cols)


def test_cross_product_associative(rng):
    def flatten_left(path):
        # ((x, y), z) -> (x, (y, z))
        return tuple((x, (y, z)) for ((x, y), z) in path)

    for _ in range(30):
        gx = rng.randint(0, 2)
        gy = rng.randint(0, 2)
        gz = rng.randint(0, 2)
        while True:
            x = tuple(rng.choice("ab") for _ in range(gx + 1))
            y = tuple(rng.choice("uv") for _ in range(gy + 1))
            z = tuple(rng.choice([0, 1]) for _ in range(gz + 1))
            if is_regular(x) and is_regular(y) and is_regular(z):
                break
        left = cross_product(cross_product(Chain.of(x), Chain.of(y)), Chain.of(z))
        right = cross_product(Chain.of(x), cross_product(Chain.of(y), Chain.of(z)))
        relabeled = Chain(left.grade, {flatten_left(p): c for p, c in left.terms.items()})
        assert relabeled == right


def test_chain_serialization_round_trip():
    c = Chain(1, {(1, 3): Fraction(1), (1, 4): Fraction(-1),
                  (5, 3): Fraction(-1), (5, 4): Fraction(1, 2)})
    assert c.to_string() == "1 * 1.3 + -1 * 1.4 + -1 * 5.3 + 1/2 * 5.4"
    assert parse_chain(c.to_string()) == c
