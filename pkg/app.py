# app.py
import argparse
import copy
import json
import logging
import os
import sys

from modules.checks import ConsistencyChecker
from modules.chigenus import ChiGenusAnalyzer, TropicalAnalyzer
from modules.errors import InputValidationError, PipelineDisagreement, RefinedTropError
from modules.report import (
    diff_reports,
    dumps_report,
    export_cones_csv,
    export_issues_csv,
    format_cycle_lines,
    render_png,
    render_svg,
)
from modules.session import load_session
from modules.toddint import ToddIntegrator

COMMANDS = ("chiy", "tropy", "trop", "dhn", "toddchi", "render", "check")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_DISAGREEMENT = 2

DEFAULT_CONFIG = {
    "ChiGenusAnalyzer": {"check_vanishing": True, "all_pipelines": False, "dhn_workers": 1},
    "TropicalAnalyzer": {"displacement_seed": None, "displacement_retries": 32},
    "ToddIntegrator": {"cross_check": True},
    "ConsistencyChecker": {"displacement_seed": None, "displacement_retries": 32},
    "SvgRenderer": {"size": 480, "ray_length": 180, "font_size": 14},
    "Global": {"debug": False, "slow_checks": False},
}


def merge_config(path=None):
    """DEFAULT_CONFIG updated by a JSON file: dict sections update, scalars replace."""
    config = copy.deepcopy(DEFAULT_CONFIG)
    if not path:
        return config
    try:
        with open(path, "r") as f:
            custom_config = json.load(f)
        for key, value in custom_config.items():
            if key in config and isinstance(config[key], dict) and isinstance(value, dict):
                config[key].update(value)
            else:
                config[key] = value
        print(f"Loaded custom configuration from {path}")
    except FileNotFoundError:
        print(f"Warning: Config file {path} not found. Using default settings.")
    except json.JSONDecodeError:
        print(f"Warning: Error decoding JSON from {path}. Using default settings.")
    return config


def module_config(config, name):
    section = dict(config.get(name, {}))
    section["Global"] = config.get("Global", {})
    return section


class RefinedTropRunner:
    def __init__(self, session, config=None, output_format="text"):
        self.session = session
        self.config = config if config else copy.deepcopy(DEFAULT_CONFIG)
        self.output_format = output_format
        self.report = {}
        self.cycle = None
        self.lines = []

    def _chi_lines(self, section, label):
        chi = section["chi_y"]
        text = chi["text"]
        if chi["factored"] != text.replace(" ", ""):
            text = f"{text} = {chi['factored']}"
        lines = [f"chi_y({label}) = {text}", f"pipeline: {section['pipeline']}"]
        pipes = section.get("pipelines", {})
        if len(pipes) > 1:
            for name, value in sorted(pipes.items()):
                lines.append(f"  {name}: {value}")
            for name, reason in sorted(section.get("skipped_pipelines", {}).items()):
                lines.append(f"  {name}: skipped ({reason})")
            lines.append(f"agreement: {'yes' if section['agreement'] else 'NO'}")
        if "mixed_volume" in section:
            lines.append(f"mixed volume: {section['mixed_volume']}")
        return lines

    def run(self, command, names, all_pipelines=False):
        """Runs one command; returns the exit code."""
        label = ",".join(names)
        if command in ("chiy", "dhn"):
            analyzer = ChiGenusAnalyzer(config=module_config(self.config, "ChiGenusAnalyzer"))
            pipeline = "factored" if command == "chiy" else "dhn"
            out = analyzer.analyze(self.session, names, pipeline=pipeline, all_pipelines=all_pipelines or None)
            self.report.update(out)
            section = out[analyzer.module_name]
            self.lines = self._chi_lines(section, label)
            return EXIT_OK if section["agreement"] else EXIT_DISAGREEMENT

        if command == "toddchi":
            integrator = ToddIntegrator(config=module_config(self.config, "ToddIntegrator"))
            out = integrator.analyze(self.session, names)
            self.report.update(out)
            section = out[integrator.module_name]
            self.lines = [
                f"integral = {section['integral_text']}",
                f"chi_y({label}) = {section['chi_y']['text']}",
                "pipeline: todd",
            ]
            return EXIT_OK

        if command in ("tropy", "trop", "render"):
            analyzer = TropicalAnalyzer(config=module_config(self.config, "TropicalAnalyzer"))
            refined = command != "trop"
            out = analyzer.analyze(self.session, names, refined=refined)
            self.cycle = analyzer.cycle
            self.report.update(out)
            kind = "Trop_y" if refined else "Trop"
            self.lines = [f"{kind}({label}):"] + format_cycle_lines(self.cycle)
            return EXIT_OK

        if command == "check":
            checker = ConsistencyChecker(config=module_config(self.config, "ConsistencyChecker"))
            out = checker.analyze(self.session, names)
            self.report.update(out)
            section = out[checker.module_name]
            self.lines = [f"checks for {label or 'torus'}:"]
            for key in ("balanced_refined", "balanced_unrefined", "product_rule", "hypersurface_series"):
                if key in section:
                    self.lines.append(f"  {key}: {'pass' if section[key]['passed'] else 'FAIL'}")
            if "specialization" in section:
                special = section["specialization"]
                ok = special["support_equal"] and special["top_matches"]
                self.lines.append(f"  specialization: {'pass' if ok else 'FAIL'}")
            self.lines.append(f"  pipelines: {'pass' if section['pipelines']['agreement'] else 'FAIL'}")
            self.lines.append(f"  nilpotency: {'pass' if not section['nilpotency_failures'] else 'FAIL'}")
            for issue in section["issues"]:
                self.lines.append(f"  [{issue['severity']}] {issue['code']}: {issue['title']}")
            return EXIT_OK if section["passed"] else EXIT_DISAGREEMENT

        raise InputValidationError(f"unknown command '{command}'")

    def render(self, svg_path=None, png_path=None):
        svg_cfg = self.config.get("SvgRenderer", {})
        svg = render_svg(self.cycle, svg_path, svg_cfg)
        if png_path:
            if render_png(self.cycle, png_path, svg_cfg) is None:
                print("Warning: Pillow is not installed; PNG output skipped.")
        return svg

    def emit(self):
        if self.output_format == "json":
            return dumps_report(self.report)
        return "\n".join(self.lines + ["note: values valid for generic coefficients"]) + "\n"

    def save_report_to_file(self, command, names):
        if not os.path.exists("reports"):
            os.makedirs("reports")
        safe = "_".join(names) or "torus"
        filename = f"reports/{command}_{safe}.json"
        with open(filename, "w") as f:
            f.write(dumps_report(self.report))
        print(f"Report saved to {filename}")
        return filename


def _export_csv(runner, export_dir):
    os.makedirs(export_dir, exist_ok=True)
    if runner.cycle is not None:
        export_cones_csv(os.path.join(export_dir, "cones.csv"), runner.cycle)
    checks = runner.report.get("ConsistencyChecker")
    if checks is not None:
        export_issues_csv(os.path.join(export_dir, "issues.csv"), checks.get("issues", []))


def run_cli(argv=None):
    parser = argparse.ArgumentParser(
        prog="refinedtrop",
        description="chi_y-genera and refined tropicalizations of generic complete intersections",
    )
    parser.add_argument("command", choices=COMMANDS, help="Computation to run.")
    parser.add_argument("names", nargs="*", default=[], help="Polytope names (alternative to --polytopes).")
    parser.add_argument("--input", required=True, help="Session JSON file with lattice_rank and polytopes.")
    parser.add_argument("--polytopes", type=str, default=None, help="Comma-separated polytope names, e.g. D1,D2.")
    parser.add_argument("--format", choices=["text", "json"], default="text", help="Output format.")
    parser.add_argument("--svg", type=str, default=None, help="Write the rank 2 drawing to this SVG file.")
    parser.add_argument("--png", type=str, default=None, help="Also write a PNG raster (needs Pillow).")
    parser.add_argument("--all-pipelines", action="store_true", help="Run every applicable chi_y pipeline and compare.")
    parser.add_argument("--config", type=str, default=None, help="Path to a JSON config file.")
    parser.add_argument("--seed", type=int, default=None, help="Override the displacement vector seed.")
    parser.add_argument("--export-csv", type=str, default=None, help="Directory to export cones.csv / issues.csv.")
    parser.add_argument("--compare-report", type=str, default=None, help="Previous JSON report to diff against.")
    parser.add_argument("--save-report", action="store_true", help="Write the JSON report under reports/.")
    parser.add_argument("--debug", action="store_true", help="Debug logging.")
    args = parser.parse_args(argv)

    config = merge_config(args.config)
    if args.debug:
        config["Global"]["debug"] = True
    if args.seed is not None:
        for section in ("TropicalAnalyzer", "ConsistencyChecker"):
            config.setdefault(section, {})["displacement_seed"] = args.seed
    logging.basicConfig(
        level=logging.DEBUG if config["Global"].get("debug") else logging.WARNING,
        format="%(name)s: %(message)s",
    )

    names = list(args.names)
    if args.polytopes:
        names += [n.strip() for n in args.polytopes.split(",") if n.strip()]

    try:
        session = load_session(args.input, verify_hulls=bool(config["Global"].get("slow_checks")))
        session.output_format = args.format
        session.svg_path = args.svg
        runner = RefinedTropRunner(session, config=config, output_format=args.format)
        code = runner.run(args.command, names, all_pipelines=args.all_pipelines)
        svg = None
        if runner.cycle is not None and (args.command == "render" or args.svg or args.png):
            svg = runner.render(args.svg, args.png)
        if args.command == "render" and not args.svg:
            sys.stdout.write(svg)
        else:
            sys.stdout.write(runner.emit())
        if args.export_csv:
            _export_csv(runner, args.export_csv)
        if args.save_report:
            runner.save_report_to_file(args.command, names)
        if args.compare_report:
            try:
                with open(args.compare_report, "r") as f:
                    old = json.load(f)
                print(dumps_report(diff_reports(old, runner.report)), end="")
            except (OSError, json.JSONDecodeError) as e:
                print(f"Failed to generate diff: {e}")
        return code
    except PipelineDisagreement as e:
        print(f"Pipeline disagreement: {e}")
        for name, value in sorted(e.results.items()):
            print(f"  {name}: {value}")
        return EXIT_DISAGREEMENT
    except FileNotFoundError as e:
        print(f"Error: {e}")
        return EXIT_VALIDATION
    except (InputValidationError, ValueError) as e:
        print(f"Error: {e}")
        return EXIT_VALIDATION
    except RefinedTropError as e:
        print(f"Error: {e}")
        return EXIT_DISAGREEMENT


if __name__ == "__main__":
    sys.exit(run_cli())
