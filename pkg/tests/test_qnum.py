from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qbarnes import (
    ExponentAlignmentError,
    FractionalArg,
    PreconditionError,
    QBase,
    qbracket,
    qbracket_base,
    qbracket_z,
)


def test_qbracket_values():
    assert qbracket(3, F(2)) == 7
    assert qbracket(0, F(5, 3)) == 0
    assert qbracket(1, F(5, 3)) == 1
    assert qbracket(-1, F(2)) == F(-1, 2)
    # base 1 degenerates to the argument itself
    assert qbracket(4, F(1)) == 4


def test_qbracket_z_matches_geometric_sum():
    u = F(3, 2)
    assert qbracket_z(4, u) == 1 + u + u**2 + u**3
    assert qbracket_z(0, u) == 0


def test_qbase_validation():
    with pytest.raises(PreconditionError):
        QBase(F(1))
    assert QBase(F(1), classical=True).value == 1
    with pytest.raises(PreconditionError):
        QBase(F(2), 0)
    b = QBase(F(2), 3)
    assert b.value == 8
    assert b.power(2) == 4  # (q^{1/3})^2


def test_fractional_arg():
    w = FractionalArg(3, 2)
    assert w.as_fraction() == F(3, 2)
    assert FractionalArg(4).as_fraction() == 4
    assert FractionalArg.coerce(5) == FractionalArg(5, 1)
    with pytest.raises(PreconditionError):
        FractionalArg(1, 0)


def test_qbracket_base_half_argument():
    q = F(9, 4)
    base = QBase(F(3, 2), 2)  # base value q = 9/4, square root 3/2
    assert base.value == q
    # [1/2 : q] = (1 - q^{1/2})/(1 - q) = 1/(1 + q^{1/2})
    got = qbracket_base(FractionalArg(1, 2), base)
    assert got == 1 / (1 + F(3, 2))
    assert qbracket_base(FractionalArg(2, 1), base) == qbracket(2, q)


def test_qbracket_base_alignment():
    base = QBase(F(2), 1)
    with pytest.raises(ExponentAlignmentError):
        qbracket_base(FractionalArg(1, 2), base)
    with pytest.raises(ExponentAlignmentError):
        qbracket_base(FractionalArg(1, 3), QBase(F(2), 2))


@settings(deadline=None)
@given(
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=-8, max_value=8),
    st.fractions(min_value=-4, max_value=4, max_denominator=5),
)
def test_qbracket_cocycle(x, y, q):
    if q in (0, 1):
        return
    assert qbracket(x + y, q) == qbracket(x, q) + q**x * qbracket(y, q)
