"""
Solendim Runner Display Tests
"""

from unittest import mock

import pytest

from solendim.runner.display import (
    display_list,
    display_table_full,
    display_table_minimal,
    display_text_summary,
    print_report,
    print_summary,
)
from solendim.runner.types import DisplayMode, SweepRow

POINT = {"beta1": 0.3, "beta2": 0.3, "tau1": 0.2, "tau2": 0.2, "p": 0.5}


def _rows():
    return [
        SweepRow(
            index=0,
            point=POINT,
            regime="disjoint",
            box_dim=1.575717,
            hausdorff_dim=1.575717,
            measure_dim=1.575717,
            verdict="full-dimension",
        ),
        SweepRow(index=1, point=POINT, error="TauSumTooLarge"),
    ]


# ---------------------------
# Unit tests
# ---------------------------


@pytest.mark.parametrize("display", [display_table_full, display_table_minimal])
def test_display_tables(display):
    """
    Scenario:
        Display passed and failed rows as a table.

    Expected:
        One console print of the table.
    """
    with mock.patch("solendim.runner.display.console.print") as mock_print:
        display(_rows())
        mock_print.assert_called_once()


def test_display_text_summary():
    """
    Scenario:
        Display two rows as text.

    Expected:
        One line per row, the error shown for the failed one.
    """
    with mock.patch("solendim.runner.display.pretty_print") as mock_print:
        display_text_summary(_rows())

        assert mock_print.call_count == 2
        assert "TauSumTooLarge" in mock_print.call_args_list[1].args[0]


def test_display_text_summary_empty():
    """
    Scenario:
        No rows.

    Expected:
        Nothing printed.
    """
    with mock.patch("solendim.runner.display.pretty_print") as mock_print:
        display_text_summary([])
        mock_print.assert_not_called()


def test_display_list_skips_empty_fields():
    """
    Scenario:
        List the failed row only.

    Expected:
        Header, the five grid values and the error.
    """
    with mock.patch("solendim.runner.display.pretty_print") as mock_print:
        display_list(_rows()[1:])

        lines = [call.args[0] for call in mock_print.call_args_list]
        assert lines[0] == "1: ❌ Failed"
        assert "error = TauSumTooLarge" in lines
        assert len(lines) == 7


@pytest.mark.parametrize(
    "mode, target",
    [
        (DisplayMode.TABLE_FULL, "display_table_full"),
        (DisplayMode.TABLE_MINIMAL, "display_table_minimal"),
        (DisplayMode.TEXT, "display_text_summary"),
        (DisplayMode.LIST, "display_list"),
    ],
)
def test_print_summary_dispatch(mode, target):
    """
    Scenario:
        Print a summary in each mode.

    Expected:
        The matching display function runs and the counts are printed.
    """
    rows = _rows()
    with mock.patch(f"solendim.runner.display.{target}") as mock_display:
        with mock.patch("solendim.runner.display.console.print") as mock_print:
            print_summary(rows, mode)

            mock_display.assert_called_once_with(rows)
            assert "✅ 1  ❌ 1" in mock_print.call_args.args[0]


def test_print_summary_unknown_mode():
    """
    Scenario:
        An unknown display mode.

    Expected:
        ValueError is raised.
    """
    with pytest.raises(ValueError, match="Unknown display mode"):
        print_summary(_rows(), "unknown_mode")


def test_print_report():
    """
    Scenario:
        Print a report with a list field.

    Expected:
        One console print of the table.
    """
    with mock.patch("solendim.runner.display.console.print") as mock_print:
        print_report("Attractor", {"box_dim": 1.5, "caveats": ["a", "b"]})
        mock_print.assert_called_once()
