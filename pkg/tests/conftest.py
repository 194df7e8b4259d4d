import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import OField  # noqa: E402

DATA = os.path.join(os.path.dirname(__file__), "data")


def oracle_for(F):
    return OField(F.p, F.m, F.poly)


@pytest.fixture
def data_dir():
    return DATA
