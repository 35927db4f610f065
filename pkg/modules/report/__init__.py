"""Reporting helpers: issues, exact serialization, CSV exports, report diffs and drawings."""

from .issues import Issue, derive_issues
from .serialize import (
    cone_to_dict,
    cycle_to_dict,
    dumps_report,
    format_cycle_lines,
    weight_to_dict,
    weight_to_text,
)
from .export import export_cones_csv, export_issues_csv
from .compare import diff_reports
from .render import render_png, render_svg
