# -*- coding: utf-8 -*-

import csv
import io
import json
import os
import re
import sys

from wcwidth import wcswidth

from qinfo.scenarios import ScenarioResult, SweepStatistics

STYLES = {
    'reset': '\033[0m',
    'bold': '\033[1m',
    'dim': '\033[2m',
    'red': '\033[91m',
    'green': '\033[92m',
    'yellow': '\033[93m',
    'blue': '\033[94m',
    'cyan': '\033[96m',
}

STYLE_TAG_PATTERN = re.compile(r"""
    (?<!\\)     # not preceeded by a backslash - allows escaping
    <           # literal
    (/)?        # optional closing - first group
    ([a-z ]*?)  # style names - ungreedy - second group
    >           # literal
""", re.X)

SIGNIFICANT_DIGITS = 12

REPORT_FIELDS = ["capacity_c", "i_q", "i_tilde", "k_q", "purity", "classification", "is_classical"]
REPORT_HEADER = ["label", "C", "I_Q", "Ĩ_Q", "K_Q", "tr ρ²", "type", "classical"]


def colorize(message):
    """
    Replaces style tags in `message` with ANSI escape codes.

        <red bold>alert!</red bold> a thing happened

    An empty closing tag resets all styles. Styles can be nested.
    """
    active_styles = []
    parts = []
    position = 0

    for match in re.finditer(STYLE_TAG_PATTERN, message):
        is_closing = bool(match.group(1))
        styles = match.group(2).split()

        start, end = match.span()
        parts.append(message[position:start].replace("\\<", "<"))

        if is_closing:
            parts.append(STYLES["reset"])
            active_styles = [s for s in active_styles if styles and s not in styles]
            parts.extend(STYLES.get(s, "") for s in active_styles)
        else:
            active_styles = active_styles + styles
            parts.extend(STYLES.get(s, "") for s in styles)

        position = end

    if position == 0:
        return message.replace("\\<", "<")

    parts.append(message[position:])
    parts.append(STYLES["reset"])
    return "".join(parts)


def strip_tags(message):
    return re.sub(STYLE_TAG_PATTERN, "", message).replace("\\<", "<")


def use_ansi_color():
    """Returns True if ANSI color codes should be used."""

    # Windows doesn't support color unless ansicon is installed
    if sys.platform == 'win32' and 'ANSICON' not in os.environ:
        return False

    # Don't show color if stdout is not a tty, e.g. if output is piped on
    if not sys.stdout.isatty():
        return False

    if "--no-color" in sys.argv:
        return False

    return True


USE_ANSI_COLOR = use_ansi_color()

QUIET = "--quiet" in sys.argv


def print_out(*args, **kwargs):
    if not QUIET:
        args = [colorize(a) if USE_ANSI_COLOR else strip_tags(a) for a in args]
        print(*args, **kwargs)


def print_err(*args, **kwargs):
    args = [f"<red>{a}</red>" for a in args]
    args = [colorize(a) if USE_ANSI_COLOR else strip_tags(a) for a in args]
    print(*args, file=sys.stderr, **kwargs)


def print_report(text):
    """Prints a rendered report verbatim, reports are never colorized."""
    if not QUIET:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


# -- Rendering ---------------------------------------------------------------


def _real(value):
    """Rounds a real to the printed number of significant digits."""
    return float(format(value, ".{}g".format(SIGNIFICANT_DIGITS)))


def _value(value):
    if isinstance(value, bool) or isinstance(value, (str, int)) and not isinstance(value, float):
        return value

    return _real(value)


def _text(value):
    if isinstance(value, bool):
        return "yes" if value else "no"

    if isinstance(value, float):
        return format(value, ".{}g".format(SIGNIFICANT_DIGITS))

    return str(value)


def _report_values(report):
    return [_value(getattr(report, field)) for field in REPORT_FIELDS]


def pad(text, length):
    """Pads text to given length, taking into account wide characters."""
    text_length = wcswidth(text)

    if text_length < length:
        return text + ' ' * (length - text_length)

    return text


def _table(header, rows, indent="  "):
    rows = [[_text(v) for v in row] for row in rows]
    widths = [max(wcswidth(row[i]) for row in [header] + rows) for i in range(len(header))]

    lines = []
    for row in [header] + rows:
        cells = [pad(cell, width) for cell, width in zip(row, widths)]
        lines.append((indent + "  ".join(cells)).rstrip())

    return lines


def _scenario_data(result):
    return {
        "scenario": result.scenario_name,
        "parameters": {k: _value(v) for k, v in result.parameters.items()},
        "reports": [
            dict(label=label, **dict(zip(REPORT_FIELDS, _report_values(report))))
            for label, report in result.reports
        ],
        "derived_values": {k: _real(v) for k, v in result.derived_values.items()},
        "checks": [{
            "name": check.name,
            "closed_form": _real(check.closed_form),
            "computed": _real(check.computed),
            "tolerance": check.tolerance,
            "ok": check.ok,
        } for check in result.checks],
        "notes": list(result.notes),
    }


def _sweep_data(stats):
    return {field: _value(value) for field, value in stats._asdict().items()}


def _scenario_table(result):
    lines = ["Scenario: {}".format(result.scenario_name)]

    if result.parameters:
        lines.append("")
        lines.append("Parameters:")
        lines.extend(_table(["name", "value"], [[k, _value(v)] for k, v in result.parameters.items()]))

    if result.reports:
        lines.append("")
        lines.append("Reports:")
        rows = [[label] + _report_values(report) for label, report in result.reports]
        lines.extend(_table(REPORT_HEADER, rows))

    if result.derived_values:
        lines.append("")
        lines.append("Derived values:")
        lines.extend(_table(["name", "value"], [[k, _real(v)] for k, v in result.derived_values.items()]))

    if result.checks:
        lines.append("")
        lines.append("Checks:")
        rows = [[c.name, _real(c.closed_form), _real(c.computed), c.tolerance, "ok" if c.ok else "FAILED"]
                for c in result.checks]
        lines.extend(_table(["name", "closed form", "computed", "tolerance", "status"], rows))

    if result.notes:
        lines.append("")
        lines.append("Notes:")
        lines.extend("  * " + note for note in result.notes)

    return "\n".join(lines) + "\n"


def _sweep_table(stats):
    lines = ["Decoherence sweep:"]
    lines.extend(_table(["statistic", "value"], list(_sweep_data(stats).items())))
    return "\n".join(lines) + "\n"


def _scenario_csv(result, writer):
    writer.writerow(["section", "label", "key", "value"])

    for key, value in result.parameters.items():
        writer.writerow(["parameter", "", key, _text(_value(value))])

    for label, report in result.reports:
        for field, value in zip(REPORT_FIELDS, _report_values(report)):
            writer.writerow(["report", label, field, _text(value)])

    for key, value in result.derived_values.items():
        writer.writerow(["derived", "", key, _text(_real(value))])

    for check in result.checks:
        writer.writerow(["check", check.name, "closed_form", _text(_real(check.closed_form))])
        writer.writerow(["check", check.name, "computed", _text(_real(check.computed))])
        writer.writerow(["check", check.name, "ok", _text(check.ok)])

    for note in result.notes:
        writer.writerow(["note", "", "", note])


def _sweep_csv(stats, writer):
    writer.writerow(["statistic", "value"])
    for field, value in _sweep_data(stats).items():
        writer.writerow([field, _text(value)])


def render_report(result, format="table"):
    """Renders a ScenarioResult or SweepStatistics as table, json or csv text.

    Field order is fixed and reals are printed with 12 significant digits, so
    rendering the same result always gives the same bytes.
    """
    if not isinstance(result, (ScenarioResult, SweepStatistics)):
        raise TypeError("Cannot render {!r}".format(type(result)))

    is_sweep = isinstance(result, SweepStatistics)

    if format == "json":
        data = _sweep_data(result) if is_sweep else _scenario_data(result)
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"

    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if is_sweep:
            _sweep_csv(result, writer)
        else:
            _scenario_csv(result, writer)
        return buffer.getvalue()

    if format == "table":
        return _sweep_table(result) if is_sweep else _scenario_table(result)

    raise ValueError("Unknown format: {}".format(format))
