import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import dense
from qvenn.pauli import (
    PauliString,
    commutes,
    in_group,
    multiply,
    parse_pauli,
    single,
    single_qubit_errors,
    weight,
)


def paulis(n):
    return st.builds(
        lambda letters, phase: parse_pauli(letters, n).with_phase(phase),
        st.text(alphabet="IXYZ", min_size=n, max_size=n),
        st.integers(0, 3),
    )


def as_matrix(p: PauliString) -> np.ndarray:
    return dense(p.letters, p.phase_value)


class TestParse:
    def test_dense_form(self):
        p = parse_pauli("XZZXI", 5)
        assert p.x == (1, 0, 0, 1, 0)
        assert p.z == (0, 1, 1, 0, 0)
        assert p.phase == 0

    def test_indexed_form(self):
        p = parse_pauli("Z1Z2", 3)
        assert p.x == (0, 0, 0)
        assert p.z == (1, 1, 0)
        assert p.phase == 0

    def test_identity(self):
        p = parse_pauli("IIIII", 5)
        assert p.is_identity() and p.phase == 0
        assert parse_pauli("I", 9) == parse_pauli("I" * 9, 9)

    def test_indexed_collision_multiplies(self):
        # X Z = -iY
        p = parse_pauli("X1Z1", 1)
        assert p.letters == "Y"
        assert p.phase_value == -1j

    def test_phase_markers(self):
        assert parse_pauli("-XY", 2).phase_value == -1
        assert parse_pauli("+iZ", 1).phase_value == 1j
        assert parse_pauli("-iZ1", 2).phase_value == -1j
        assert parse_pauli("+X", 1).phase == 0

    def test_multi_digit_index(self):
        assert parse_pauli("X10", 10).support == (10,)

    @pytest.mark.parametrize(
        "text, n",
        [("XZQ", 3), ("XZ", 3), ("X4", 3), ("X0", 3), ("X1Q2", 3), ("1X", 3), ("X", 0)],
    )
    def test_rejects(self, text, n):
        with pytest.raises(ValueError):
            parse_pauli(text, n)

    @given(paulis(4))
    def test_format_round_trip(self, p):
        assert parse_pauli(p.format(), p.n) == p

    @given(paulis(4))
    def test_label_round_trip(self, p):
        assert parse_pauli(p.label(), p.n) == p


class TestCommutes:
    def test_x_z_single_qubit(self):
        assert not commutes(parse_pauli("X", 1), parse_pauli("Z", 1))

    def test_table_rows(self):
        h1 = parse_pauli("XZZXI", 5)
        assert not commutes(single("X", 2, 5), h1)
        assert commutes(single("X", 1, 5), h1)

    def test_phase_ignored(self):
        a = parse_pauli("XZ", 2)
        assert commutes(a, parse_pauli("-iZX", 2))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            commutes(parse_pauli("X", 1), parse_pauli("XX", 2))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_matrix_commutator(self, n):
        low_weight = [
            p for p in itertools.product("IXYZ", repeat=n)
            if sum(c != "I" for c in p) <= 2
        ]
        for a, b in itertools.product(low_weight, repeat=2):
            pa, pb = parse_pauli("".join(a), n), parse_pauli("".join(b), n)
            ma, mb = dense("".join(a)), dense("".join(b))
            assert commutes(pa, pb) == np.allclose(ma @ mb, mb @ ma)


class TestMultiply:
    def test_y_equals_i_x_z(self):
        xz = multiply(parse_pauli("X", 1), parse_pauli("Z", 1))
        assert xz.letters == "Y" and xz.phase_value == -1j
        assert xz.with_phase(xz.phase + 1) == parse_pauli("Y", 1)

    def test_involution(self):
        assert multiply(parse_pauli("X", 1), parse_pauli("X", 1)) == parse_pauli("I", 1)

    def test_stabilizer_squares_to_identity(self):
        h1 = parse_pauli("XZZXI", 5)
        sq = multiply(h1, h1)
        assert sq == parse_pauli("IIIII", 5)
        np.testing.assert_allclose(as_matrix(h1) @ as_matrix(h1), np.eye(32), atol=1e-12)

    @given(paulis(3), paulis(3))
    def test_matches_matrix_product(self, a, b):
        np.testing.assert_allclose(
            as_matrix(multiply(a, b)), as_matrix(a) @ as_matrix(b), atol=1e-12
        )

    @given(paulis(3), paulis(3), paulis(3))
    def test_associative(self, a, b, c):
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))

    @given(paulis(4))
    def test_square_is_real_identity(self, a):
        sq = multiply(a, a)
        assert sq.is_identity()
        assert sq.phase_value in (1, -1)
        if a.phase == 0:
            assert sq.phase == 0

    def test_operator_overload(self):
        a, b = parse_pauli("XI", 2), parse_pauli("ZZ", 2)
        assert a * b == multiply(a, b)


class TestWeight:
    @pytest.mark.parametrize(
        "text, n, expected", [("IIIII", 5, 0), ("XZZXI", 5, 4), ("Y3", 9, 1)]
    )
    def test_weight(self, text, n, expected):
        assert weight(parse_pauli(text, n)) == expected


def test_single_qubit_errors_enumeration():
    errors = single_qubit_errors(3)
    assert [e.label() for e in errors] == [
        "X1", "X2", "X3", "Y1", "Y2", "Y3", "Z1", "Z2", "Z3",
    ]


def test_sort_key_orders_letters_then_index():
    labels = ["Z1", "X3", "Y1", "I", "X1"]
    ordered = sorted((parse_pauli(s, 3) for s in labels), key=PauliString.sort_key)
    assert [p.label() for p in ordered] == ["I", "X1", "X3", "Y1", "Z1"]


def test_in_group():
    gens = [parse_pauli(s, 3) for s in ("Z1Z2", "Z2Z3")]
    assert in_group(parse_pauli("Z1Z3", 3), gens)
    assert in_group(parse_pauli("-Z1Z3", 3), gens)
    assert in_group(parse_pauli("I", 3), gens)
    assert not in_group(parse_pauli("Z1", 3), gens)
    assert not in_group(parse_pauli("X1X2", 3), gens)
