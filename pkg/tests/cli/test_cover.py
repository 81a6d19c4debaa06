"""
Solendim CLI Cover Tests
"""

import json

import pytest

from solendim.cli.main import app

# ---------------------------
# Unit tests
# ---------------------------


def test_cover_depth_two(runner, tmp_path):
    """
    Scenario:
        cover at depth 2 for v = (0.3, 0.3, 0.2, 0.2).

    Expected:
        Four rectangles with half-widths beta^2 and tau^2.
    """
    out = tmp_path / "cover.json"
    result = runner.invoke(app, ["cover", "--v", "0.3,0.3,0.2,0.2", "-d", "2", "-o", str(out)])

    assert result.exit_code == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["config"]["depth"] == 2
    assert len(data["result"]) == 4
    for rectangle in data["result"]:
        assert rectangle["half_widths"] == pytest.approx([0.09, 0.04])


def test_cover_too_deep(runner):
    """
    Scenario:
        Depth beyond the supported maximum.

    Expected:
        Exit code 1 naming DepthTooLarge.
    """
    result = runner.invoke(app, ["cover", "--v", "0.3,0.3,0.2,0.2", "-d", "25"])

    assert result.exit_code == 1
    assert "DepthTooLarge" in result.output
