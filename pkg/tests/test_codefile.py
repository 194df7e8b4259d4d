import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eaqecc import LinearCode, field
from eaqecc.codefile import format_code, parse_code, read_code
from eaqecc.errors import CodeFileError

GOOD = """# a comment
field p=2 m=2 poly=7
layout=plain   # trailing comment
rows=2 cols=3
1 2 3
0 1 1
"""


def test_parse_good_file():
    C = parse_code(GOOD)
    assert C.field == field(2, 2)
    assert C.layout == "plain" and C.length == 3 and C.dim == 2
    assert C.generator.tolist() == [[1, 2, 3], [0, 1, 1]]


def test_symplectic_layout_and_default_modulus():
    C = parse_code("field p=3 m=1\nlayout=symplectic n=2\nrows=1 cols=4\n1 0 2 0\n")
    assert C.layout == "symplectic" and C.n == 2
    assert parse_code("field p=3 m=2\nlayout=plain\nrows=0 cols=2\n").field == field(3, 2)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "layout=plain\nfield p=2\nrows=0 cols=1\n",
        "field p=4 m=1\nlayout=plain\nrows=0 cols=1\n",
        "field p=2 m=2 poly=5\nlayout=plain\nrows=0 cols=1\n",
        "field p=2 x=1\nlayout=plain\nrows=0 cols=1\n",
        "field p=2\nlayout=weird\nrows=0 cols=1\n",
        "field p=2\nlayout=symplectic\nrows=1 cols=3\n1 0 1\n",
        "field p=2\nlayout=symplectic n=3\nrows=1 cols=4\n1 0 1 0\n",
        "field p=2\nlayout=plain n=2\nrows=1 cols=2\n1 0\n",
        "field p=2\nlayout=plain\nrows=2 cols=2\n1 0\n",
        "field p=2\nlayout=plain\nrows=1 cols=2\n1 0 1\n",
        "field p=2\nlayout=plain\nrows=1 cols=2\n1 2\n",
        "field p=2\nlayout=plain\nrows=1 cols=2\n1 a\n",
        "field p=2\nlayout=plain\nrows=x cols=2\n1 0\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(CodeFileError):
        parse_code(text)


def test_missing_file(tmp_path):
    with pytest.raises(CodeFileError):
        read_code(tmp_path / "nope.code")


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([(2, 1), (3, 1), (2, 2), (3, 2), (2, 3)]),
    st.sampled_from(["plain", "symplectic"]),
    st.integers(0, 2**32 - 1),
)
def test_round_trip(spec, layout, seed):
    F = field(*spec)
    rng = np.random.default_rng(seed)
    length = 2 * int(rng.integers(1, 4))
    C = LinearCode(F, rng.integers(0, F.q, (int(rng.integers(0, length + 1)), length)), layout, length)
    back = parse_code(format_code(C, "round\ntrip"))
    assert back == C and back.layout == layout and back.field == F
