#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
The program's entry point
"""

from __future__ import unicode_literals, print_function

import io
import sys
from argparse import ArgumentParser
from collections import namedtuple, OrderedDict

from pysullivan.__version__ import __version__
from pysullivan.core import catalog
from pysullivan.core.common import (
    EXIT_CODE_NO_FILE,
    SullivanError,
)
from pysullivan.core.esharp import (
    group_profile,
    h0_sharp,
)
from pysullivan.core.homology import (
    DegreeWindow,
    autF_homology,
    homology,
    pi1_rank,
)
from pysullivan.core.invariants import (
    invariants_report,
    nilpotency_within_window,
)
from pysullivan.core.renderer import RENDERERS
from pysullivan.core.sullivan import (
    is_fibre_minimal,
    linear_part_split,
    validate_morphism,
    validate_relative_model,
)
from pysullivan.reader import (
    dump_model,
    example_file,
    list_examples,
    read_model,
    read_morphism,
)
from pysullivan.utils.other import (
    get_named_logger,
    log_level,
    setup_logs,
)

LOG = get_named_logger(__name__, __file__)

RunConfig = namedtuple('RunConfig', [
    'command', 'model', 'catalog', 'morphism', 'window', 'format', 'out', 'export'])

COMMANDS = OrderedDict([
    ('validate', 'check the structural conditions of the model (and morphism)'),
    ('homology', 'homotopy Lie algebra of Aut(p) or ranks of the mapping space'),
    ('esharp', 'the group of ♯-self-equivalences with its BCH product'),
    ('autf', 'homotopy Lie algebra of the fibrewise monoid Aut^F(p)'),
    ('invariants', 'nilpotency bounds and predicted dimensions'),
    ('catalog', 'list the built-in models or export one of them'),
])


def _window_arg(value):
    return DegreeWindow.from_string(value)


def cli_args(argv=None):
    """Parses the arguments given to the script"""
    parser = ArgumentParser(
        description='Rational homotopy of the fibrewise self-equivalences of a fibration '
                    'given by its relative Sullivan model')

    parser.add_argument('--version', action='store_true',
                        help='show version and exit')
    parser.add_argument('--show-examples-folder', action='store_true',
                        help='show the path to examples folder and exit')

    common = ArgumentParser(add_help=False)
    model_source = common.add_mutually_exclusive_group()
    model_source.add_argument('-m', '--model',
                              help='model file (or the name of bundled example)')
    model_source.add_argument('-c', '--catalog',
                              help='key of the built-in model, e.g. product:sphere2/sphere3')

    common.add_argument('--morphism',
                        help='morphism file to compute the φ-derivations along')
    common.add_argument('-w', '--window', type=_window_arg,
                        help='the degrees to compute in, LO:HI')
    common.add_argument('-f', '--format', choices=sorted(RENDERERS), default='human',
                        help='output format')
    common.add_argument('-o', '--out',
                        help='write the report to the file instead of stdout')
    common.add_argument('--verbose', '-v', action='count',
                        help='increase logging level')

    subparsers = parser.add_subparsers(dest='command')
    for name, help_text in COMMANDS.items():
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        if name == 'catalog':
            sub.add_argument('--export', action='store_true',
                             help='print the model file of the catalog entry')

    args = parser.parse_args(argv)
    if not (args.version or args.show_examples_folder):
        if not args.command:
            parser.error('Choose the command: {}'.format(', '.join(COMMANDS)))

        if args.command != 'catalog' and not (args.model or args.catalog or args.morphism):
            parser.error('Specify the model with --model, --catalog or --morphism')

        if args.command == 'catalog' and getattr(args, 'export', False) and not args.catalog:
            parser.error('Specify the --catalog key to export')

    return args


def make_config(args):
    """Collect the run configuration from the parsed arguments"""
    return RunConfig(
        command=args.command,
        model=args.model,
        catalog=args.catalog,
        morphism=args.morphism,
        window=args.window,
        format=args.format,
        out=args.out,
        export=getattr(args, 'export', False),
    )


def load_entry(config):
    """The catalog entry, or the model file wrapped as the entry"""
    if config.catalog:
        return catalog.build(config.catalog)

    if config.morphism and not config.model:
        model = read_morphism(config.morphism).source
    else:
        model = read_model(config.model)

    return catalog.CatalogEntry(
        model.name, model, fibre_minimal_w=is_fibre_minimal(model))


def _window(config, model):
    return config.window or DegreeWindow.default(model)


def cmd_validate(config):
    """Validate the model (and the morphism)"""
    entry = load_entry(config)
    model = entry.model

    report = validate_relative_model(model)
    res = OrderedDict([
        ('model', str(model)),
        ('validation', report.to_dict()),
    ])

    failed = not report.ok
    if report.is_valid:
        res['split'] = linear_part_split(model).to_dict()

    if config.morphism:
        morphism_report = validate_morphism(read_morphism(config.morphism))
        res['morphism_validation'] = morphism_report.to_dict()
        failed = failed or not morphism_report.ok
        if not morphism_report.ok:
            print(morphism_report, file=sys.stderr)

    if failed:
        print(report, file=sys.stderr)
        return 3, res

    return 0, res


def cmd_homology(config):
    """The homology of derivations (or φ-derivations along the morphism)"""
    if config.morphism:
        morphism = read_morphism(config.morphism)
        model = morphism.source
        window = _window(config, model)
        report = homology(model, window, morphism=morphism)
        res = report.to_dict()
        res['pi1_rank'] = report.dims()[1] if 1 in window else pi1_rank(model, morphism)
        return 0, res

    model = load_entry(config).model
    report = homology(model, _window(config, model))
    res = report.to_dict()
    res['nilpotency_lower_bound'] = nilpotency_within_window(report)
    return 0, res


def cmd_esharp(config):
    """The group E_♯(p) as H_0(Der_♯)"""
    model = load_entry(config).model
    group = h0_sharp(model)
    res = OrderedDict([('split', group.split.to_dict())])
    res.update(group_profile(group))
    return 0, res


def cmd_autf(config):
    """The homology of the Aut^F subcomplex"""
    model = load_entry(config).model
    report = autF_homology(model, _window(config, model))
    return 0, report.to_dict()


def cmd_invariants(config):
    """The bounds and the predictions"""
    entry = load_entry(config)
    return 0, invariants_report(entry, _window(config, entry.model))


def cmd_catalog(config, stream=None):
    """List the catalog or export a single entry"""
    if config.catalog:
        entry = catalog.build(config.catalog)
        if config.export:
            print(dump_model(entry.model), file=stream or sys.stdout)
            return 0, None

        report = validate_relative_model(entry.model)
        res = entry.to_dict()
        res['validation'] = report.to_dict()
        return 0, res

    return 0, OrderedDict([
        ('entries', [entry.to_dict() for entry in catalog.list_entries()]),
        ('examples', list_examples()),
    ])


COMMAND_HANDLERS = {
    'validate': cmd_validate,
    'homology': cmd_homology,
    'esharp': cmd_esharp,
    'autf': cmd_autf,
    'invariants': cmd_invariants,
}


def run(config, stream):
    """Execute the command and render the result to the stream"""
    if config.command == 'catalog':
        code, report = cmd_catalog(config, stream)
    else:
        code, report = COMMAND_HANDLERS[config.command](config)

    if report is not None:
        renderer = RENDERERS[config.format](stream=stream)
        renderer.draw(config.command, report)

    return code


def main(argv=None):
    """Main function for setuptools console_scripts"""
    args = cli_args(argv)
    if args.version:
        print(__version__)
        return 0

    if args.show_examples_folder:
        print(example_file())
        return 0

    setup_logs(log_level(args.verbose))
    config = make_config(args)

    try:
        if config.out:
            with io.open(config.out, 'w', encoding='utf-8') as stream:
                return run(config, stream)

        return run(config, sys.stdout)

    except SullivanError as ex:
        LOG.info('Command %r failed: %r', config.command, ex)
        print('Error: {}'.format(ex), file=sys.stderr)
        report = getattr(ex, 'report', None)
        if report is not None:
            print(report, file=sys.stderr)
        return ex.exit_code

    except (IOError, OSError) as ex:
        print('Error: {}'.format(ex), file=sys.stderr)
        return EXIT_CODE_NO_FILE


if __name__ == '__main__':
    sys.exit(main())
