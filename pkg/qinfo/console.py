# -*- coding: utf-8 -*-

import logging
import math
import os
import sys

from argparse import ArgumentParser, ArgumentTypeError, FileType
from collections import namedtuple

from qinfo import commands, config, PROGRAM_NAME, PROGRAM_WEBSITE, __version__
from qinfo.config import FORMATS
from qinfo.exceptions import (BadParameter, ConsoleError, DimensionMismatch, ParseError, QinfoError,
                              UnknownScenario, ValidationError)
from qinfo.output import print_out, print_err

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID_INPUT = 2
EXIT_UNKNOWN_SCENARIO = 3


def param(value):
    """Parses a --param value of the form key=value"""
    key, sep, val = value.partition("=")
    if not sep or not key.strip():
        raise ArgumentTypeError("Invalid parameter '{}', expected key=value".format(value))

    return key.strip(), val.strip()


def seed(value):
    try:
        n = int(value)
    except ValueError:
        raise ArgumentTypeError("Invalid seed '{}', expected an integer".format(value))

    if not 0 <= n < 2 ** 64:
        raise ArgumentTypeError("Seed should be between 0 and 2^64 - 1.")

    return n


def probability(value):
    p = float(value)
    if not 0 <= p <= 1:
        raise ArgumentTypeError("Probability should be between 0 and 1.")
    return p


def positive_int(value):
    n = int(value)
    if n < 1:
        raise ArgumentTypeError("Value should be at least 1.")
    return n


def spread(value):
    s = float(value)
    if not math.isfinite(s) or s < 0:
        raise ArgumentTypeError("Spread should be a finite, non negative number.")
    return s


Command = namedtuple("Command", ["name", "description", "arguments"])


# Arguments added to every command
common_args = [
    (["--no-color"], {
        "help": "don't use ANSI colors in output",
        "action": 'store_true',
        "default": False,
    }),
    (["--quiet"], {
        "help": "don't write to stdout on success",
        "action": 'store_true',
        "default": False,
    }),
    (["--debug"], {
        "help": "show debug log in console, or in $QINFO_LOG_FILE if set",
        "action": 'store_true',
        "default": False,
    }),
    (["--config"], {
        "help": "JSON file overriding default tolerances, format, seed and spread",
    }),
]

format_arg = (["-f", "--format"], {
    "choices": FORMATS,
    "help": "output format (default: table)",
})

seed_arg = (["-s", "--seed"], {
    "type": seed,
    "help": "64 bit seed for sampling scenarios (default: 0)",
})

REPORT_COMMANDS = [
    Command(
        name="info",
        description="Show the information measures of a state spec file",
        arguments=[
            (["file"], {
                "type": FileType("r", encoding="utf-8"),
                "help": "path to a JSON state spec, or - to read from stdin",
            }),
            (["--echo"], {
                "action": "store_true",
                "default": False,
                "help": "print the normalized state spec before the report",
            }),
            format_arg,
        ],
    ),
]

EXPERIMENT_COMMANDS = [
    Command(
        name="scenario",
        description="Run a named scenario",
        arguments=[
            (["name"], {
                "help": "scenario name, see list-scenarios",
            }),
            (["-p", "--param"], {
                "type": param,
                "action": "append",
                "metavar": "KEY=VALUE",
                "help": "scenario parameter, can be given multiple times",
            }),
            seed_arg,
            format_arg,
        ],
    ),
    Command(
        name="sweep",
        description="Random phase decoherence sweep over photon ensembles",
        arguments=[
            (["--a1-sq"], {
                "type": probability,
                "required": True,
                "help": "probability |a1|^2 of the photon state |0>",
            }),
            (["--n"], {
                "type": positive_int,
                "required": True,
                "help": "number of photons in the ensemble",
            }),
            (["--trials"], {
                "type": positive_int,
                "required": True,
                "help": "number of independent ensembles",
            }),
            seed_arg,
            (["--spread"], {
                "type": spread,
                "help": "phases are drawn from [0, 2π·spread), 0 gives equal phases (default: 1)",
            }),
            format_arg,
        ],
    ),
    Command(
        name="list-scenarios",
        description="List scenarios and their parameters",
        arguments=[],
    ),
]

COMMANDS = REPORT_COMMANDS + EXPERIMENT_COMMANDS


def print_usage():
    max_name_len = max(len(command.name) for command in COMMANDS)

    groups = [
        ("States", REPORT_COMMANDS),
        ("Experiments", EXPERIMENT_COMMANDS),
    ]

    print_out("<green>{}</green>".format(PROGRAM_NAME))
    print_out("<blue>v{}</blue>".format(__version__))

    for name, cmds in groups:
        print_out("")
        print_out(name + ":")

        for cmd in cmds:
            cmd_name = cmd.name.ljust(max_name_len + 2)
            print_out("  <yellow>qinfo {}</yellow> {}".format(cmd_name, cmd.description))

    print_out("")
    print_out("To get help for each command run:")
    print_out("  <yellow>qinfo \\<command> --help</yellow>")
    print_out("")
    print_out("<green>{}</green>".format(PROGRAM_WEBSITE))


def get_argument_parser(name, command):
    parser = ArgumentParser(
        prog='qinfo %s' % name,
        description=command.description,
        epilog=PROGRAM_WEBSITE)

    for args, kwargs in command.arguments + common_args:
        parser.add_argument(*args, **kwargs)

    return parser


def run_command(name, args):
    command = next((c for c in COMMANDS if c.name == name), None)

    if not command:
        print_err("Unknown command '{}'\n".format(name))
        print_usage()
        return EXIT_UNKNOWN_SCENARIO

    parser = get_argument_parser(name, command)
    parsed_args = parser.parse_args(args)

    settings = config.load_settings(parsed_args.config)

    fn = commands.__dict__.get(name.replace("-", "_"))

    if not fn:
        raise NotImplementedError("Command '{}' does not have an implementation.".format(name))

    fn(settings, parsed_args)
    return EXIT_OK


def exit_code(error):
    # Dimensions only come from user input on the command line
    if isinstance(error, (ParseError, ValidationError, DimensionMismatch, ConsoleError)):
        return EXIT_INVALID_INPUT

    if isinstance(error, (UnknownScenario, BadParameter)):
        return EXIT_UNKNOWN_SCENARIO

    return EXIT_ERROR


def main():
    # Enable debug logging if --debug is in args
    if "--debug" in sys.argv:
        filename = os.getenv("QINFO_LOG_FILE")
        logging.basicConfig(level=logging.DEBUG, filename=filename)

    command_name = sys.argv[1] if len(sys.argv) > 1 else None
    args = sys.argv[2:]

    if not command_name:
        return print_usage()

    try:
        code = run_command(command_name, args)
    except QinfoError as e:
        print_err(str(e))
        sys.exit(exit_code(e))
    except KeyboardInterrupt:
        code = EXIT_ERROR

    sys.exit(code)
