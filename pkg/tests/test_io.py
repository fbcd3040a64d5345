from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from leviext.fixtures import dl8, heisenberg, table2, table2_action
from leviext.io import (
    MalformedInput, dumps_linmap, dumps_lieconst, dumps_sl2act, format_rational, loads_linmap,
    loads_lieconst, loads_sl2act, parse_rational,
)
from leviext.lie import LieAlgebra
from leviext.linalg import Matrix
from leviext.sl2 import irreducible


@settings(max_examples=100)
@given(st.fractions())
def test_rational_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_rational_format():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(4)) == "4"


@pytest.mark.parametrize("L", [dl8(), heisenberg(2), table2()])
def test_lieconst_roundtrip(L):
    text = dumps_lieconst(L)
    back = loads_lieconst(text)
    assert back == L and back.labels == L.labels and back.grade == L.grade
    assert dumps_lieconst(back) == text


def test_default_labels_not_written():
    text = dumps_lieconst(LieAlgebra(2, {(0, 1, 1): 1}))
    assert "labels" not in text


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)).filter(lambda t: t[0] < t[1]),
    st.fractions().filter(bool), max_size=8,
))
def test_random_lieconst_roundtrip(consts):
    L = LieAlgebra(5, consts)
    assert loads_lieconst(dumps_lieconst(L)) == L


def test_sl2act_and_linmap_roundtrip():
    A = table2_action()
    B = loads_sl2act(dumps_sl2act(A))
    assert B.matrices() == A.matrices()
    M = Matrix.from_dense([[1, Fraction(1, 3)], [0, -2]])
    assert loads_linmap(dumps_linmap(M)) == M


MALFORMED = [
    "",
    "lieconst 2\ndim 2\n",
    "lieconst 1\nname x\ndim 2\n",
    "lieconst 1\ndim -1\n",
    "lieconst 1\ndim 2\nc 2 1 1 1\n",
    "lieconst 1\ndim 2\nc 1 1 1 1\n",
    "lieconst 1\ndim 2\nc 1 2 3 1\n",
    "lieconst 1\ndim 2\nc 1 2 1 1/0\n",
    "lieconst 1\ndim 2\nc 1 2 1 0.5\n",
    "lieconst 1\ndim 2\nc 1 2 1 1\nc 1 2 1 2\n",
    "lieconst 1\ndim 2\ngrade 1\n",
    "lieconst 1\ndim 2\ngrade 1 0\n",
    "lieconst 1\ndim 2\nlabels a\n",
    "lieconst 1\ndim 2\nbogus 1\n",
    "lieconst 1\ndim 2\nc 1 2 1\n",
]


@pytest.mark.parametrize("text", MALFORMED)
def test_malformed_lieconst(text):
    with pytest.raises(MalformedInput):
        loads_lieconst(text)


def test_malformed_sl2act():
    A = irreducible(2)
    bad = dumps_sl2act(A).replace("E 1 2 2", "E 1 2 3")
    with pytest.raises(MalformedInput):
        loads_sl2act(bad)
    with pytest.raises(MalformedInput):
        loads_sl2act("sl2act 1\ndim 2\nX 1 1 1\n")


def test_comments_ignored():
    L = loads_lieconst("lieconst 1  # header\ndim 3\n# products\nc 1 2 3 1\n")
    assert L == heisenberg(1)
