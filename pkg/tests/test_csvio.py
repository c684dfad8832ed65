"""CSV ingestion: header handling, the complex cell grammar, and the error
positions."""

import numpy as np
import pytest

from gramdist import EmptyFile, ParseError, RaggedRows
from gramdist.csvio import parse_csv


def write(tmp_path, text, name="t.csv"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


class TestBasics:
    def test_one_row_two_cols(self, tmp_path):
        t = parse_csv(write(tmp_path, "x,y\n1,2\n"))
        assert t.header == ("x", "y")
        assert t.rows == ((1.0, 2.0),)
        np.testing.assert_array_equal(t.matrix(), [[1.0, 2.0]])

    def test_complex_cell(self, tmp_path):
        t = parse_csv(write(tmp_path, "a\n1+2i\n"), mode="complex")
        assert t.rows == ((1 + 2j,),)
        assert t.matrix().dtype == np.complex128

    def test_ragged_row_position(self, tmp_path):
        with pytest.raises(RaggedRows) as err:
            parse_csv(write(tmp_path, "x\n1\n1,2\n"))
        assert err.value.line == 3

    def test_empty_file(self, tmp_path):
        with pytest.raises(EmptyFile):
            parse_csv(write(tmp_path, ""))

    def test_header_only_gives_no_rows(self, tmp_path):
        t = parse_csv(write(tmp_path, "x,y\n"))
        assert t.rows == ()

    def test_column_lookup(self, tmp_path):
        t = parse_csv(write(tmp_path, "x,y\n1,2\n3,4\n"))
        np.testing.assert_array_equal(t.column("y"), [2.0, 4.0])
        with pytest.raises(ValueError):
            t.column("z")

    def test_parse_error_position(self, tmp_path):
        with pytest.raises(ParseError) as err:
            parse_csv(write(tmp_path, "x,y\n1,zap\n"))
        assert err.value.line == 2 and err.value.column == 2


class TestRealCells:
    @pytest.mark.parametrize("cell,value", [
        ("1", 1.0),
        ("-2.5", -2.5),
        ("+.5", 0.5),
        ("3.", 3.0),
        ("1e3", 1000.0),
        ("-1.25E-2", -0.0125),
    ])
    def test_accepted(self, tmp_path, cell, value):
        t = parse_csv(write(tmp_path, f"v\n{cell}\n"))
        assert t.rows[0][0] == value

    @pytest.mark.parametrize("cell", ["nan", "inf", "-inf", "1+2i", "1_0", "0x10", "1,5", "", "1e999"])
    def test_rejected(self, tmp_path, cell):
        with pytest.raises((ParseError, RaggedRows)):
            parse_csv(write(tmp_path, f"v\n{cell}\n"))


class TestComplexCells:
    @pytest.mark.parametrize("cell,value", [
        ("2", 2 + 0j),
        ("-3i", -3j),
        ("1+2i", 1 + 2j),
        ("1-2i", 1 - 2j),
        ("-1.5e1+0.25i", -15 + 0.25j),
        ("+2i", 2j),
        ("0.5i", 0.5j),
    ])
    def test_accepted(self, tmp_path, cell, value):
        t = parse_csv(write(tmp_path, f"v\n{cell}\n"), mode="complex")
        assert t.rows[0][0] == value

    @pytest.mark.parametrize("cell", ["i", "-i", "1 + 2i", "1+2j", "2i+1", "1+i2", "nan", "1+-2i"])
    def test_rejected(self, tmp_path, cell):
        with pytest.raises(ParseError):
            parse_csv(write(tmp_path, f"v\n{cell}\n"), mode="complex")


def test_unknown_mode(tmp_path):
    with pytest.raises(ValueError):
        parse_csv(write(tmp_path, "x\n1\n"), mode="octonion")
