# -*- coding: utf-8 -*-

from qinfo.exceptions import ConsoleError
from qinfo.output import print_out, print_report, render_report
from qinfo.scenarios import SCENARIOS, decoherence_sweep, describe_state, run_scenario
from qinfo.statefile import dump_state_spec, parse_state_spec


def _format(settings, args):
    return args.format or settings.format


def _seed(settings, args):
    return settings.seed if args.seed is None else args.seed


def info(settings, args):
    try:
        text = args.file.read()
    except UnicodeDecodeError:
        raise ConsoleError("State spec {} is not valid UTF-8".format(args.file.name))

    value = parse_state_spec(text, settings.parse_tolerance, settings.validation_tolerance)

    if args.echo:
        print_report(dump_state_spec(value))

    print_report(render_report(describe_state(value, settings.classify_tolerance), _format(settings, args)))


def scenario(settings, args):
    params = dict(args.param or [])
    result = run_scenario(args.name, params, seed=_seed(settings, args))
    print_report(render_report(result, _format(settings, args)))


def sweep(settings, args):
    spread = settings.sweep_spread if args.spread is None else args.spread
    stats = decoherence_sweep(args.a1_sq, args.n, args.trials, _seed(settings, args), spread)
    print_report(render_report(stats, _format(settings, args)))


def list_scenarios(settings, args):
    width = max(len(s.name) for s in SCENARIOS) + 2

    for s in SCENARIOS:
        print_out("<yellow>{}</yellow>{}".format(s.name.ljust(width), s.description))
        for param in s.params:
            print_out("  {} = {}".format(param.name, param.default))
