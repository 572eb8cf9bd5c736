"""Tests for formatters module using unittest methodology."""

from dataclasses import dataclass, field
import unittest

from nshridge.utils.formatters import (
    TwoColumnFormatMixin,
    _flatten_fields,
    format_number,
    pretty_print_two_columns,
)
from nshridge.utils.quantities import Slack


@dataclass
class Record(TwoColumnFormatMixin):
    """Record with a nested mapping in its dictionary."""

    a: int
    bb: str
    _format_prefix: str = field(default="rec_", init=False)

    def to_dict(self):
        """Return a nested dictionary."""
        return {"a": self.a, "bb": self.bb, "nested": {"x": 1.5, "y": None}}


class TestFormatNumber(unittest.TestCase):
    """Test cases for format_number."""

    def test_float_precision(self):
        """Test floats keep 17 significant digits."""
        self.assertEqual(format_number(0.1), "0.10000000000000001")
        self.assertEqual(format_number(2.0), "2")

    def test_non_finite_and_scalars(self):
        """Test non-finite floats, booleans, None and integers."""
        self.assertEqual(format_number(float("inf")), "inf")
        self.assertEqual(format_number(True), "True")
        self.assertEqual(format_number(None), "None")
        self.assertEqual(format_number(12), "12")

    def test_float_subclass(self):
        """Test float subclasses keep their own presentation."""
        self.assertEqual(format_number(Slack(0.5)), "0.5 (pass)")


class TestFormattersFlattenFields(unittest.TestCase):
    """Test cases for _flatten_fields function."""

    def test_flatten_simple(self):
        """Test flattening a flat mapping."""
        fields, width = _flatten_fields({"a": 1, "bb": "foo"})
        self.assertEqual(fields, [("a:", 1), ("bb:", "foo")])
        self.assertEqual(width, 3)

    def test_flatten_nested(self):
        """Test nested mappings extend the label prefix."""
        fields, width = _flatten_fields({"x": 42, "y": {"a": 7, "deep": {"z": "zz"}}})
        self.assertEqual(fields, [("x:", 42), ("y.a:", 7), ("y.deep.z:", "zz")])
        self.assertEqual(width, len("y.deep.z:"))

    def test_flatten_with_prefix(self):
        """Test flattening with a prefix for field names."""
        fields, width = _flatten_fields({"a": 5}, prefix="pre_")
        self.assertEqual(fields, [("pre_a:", 5)])
        self.assertEqual(width, 6)

    def test_flatten_skips_none_and_private(self):
        """Test flattening skips None and private fields."""
        fields, width = _flatten_fields({"a": 1, "bb": None, "_private": 123})
        self.assertEqual(fields, [("a:", 1)])
        self.assertEqual(width, 2)


class TestFormattersPrettyPrintTwoColumns(unittest.TestCase):
    """Test cases for pretty_print_two_columns function."""

    def test_pretty_print_record(self):
        """Test a record with to_dict() renders aligned columns."""
        result = pretty_print_two_columns(Record(a=1, bb="foo"), "")
        self.assertEqual(result.splitlines(), ["a:        1", "bb:       foo", "nested.x: 1.5"])

    def test_pretty_print_with_prefix(self):
        """Test pretty printing with a prefix for field names."""
        result = pretty_print_two_columns(Record(a=10, bb="baz"), prefix="P_")
        self.assertIn("P_a:", result)
        self.assertIn("P_nested.x: 1.5", result)

    def test_pretty_print_multiline_value(self):
        """Test pretty printing with sequence values, one item per line."""

        class Multi:
            def __init__(self):
                self.a = ["line1", [1.0, 2.5], 3]

        lines = pretty_print_two_columns(Multi(), "").splitlines()
        self.assertEqual("a: line1", lines[0])
        self.assertEqual("   1, 2.5", lines[1])
        self.assertEqual("   3", lines[2])

    def test_pretty_print_empty_sequence(self):
        """Test empty sequences render as brackets."""

        class Empty:
            def __init__(self):
                self.a = []

        self.assertEqual(pretty_print_two_columns(Empty(), ""), "a: []")

    def test_pretty_print_empty_object(self):
        """Test pretty printing an empty object."""

        class Empty:
            pass

        self.assertEqual(pretty_print_two_columns(Empty(), ""), "")

    def test_mixin_uses_format_prefix(self):
        """Test the mixin applies the record's _format_prefix."""
        text = format(Record(a=3, bb="q"))
        self.assertIn("rec_a:", text)
        self.assertIn("rec_nested.x:", text)
        self.assertNotIn("_format_prefix", text)
