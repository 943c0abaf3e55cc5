# isodiv - Command Line Control
# licensed under the GNU Public License, version 2

"""\
This module reads the command line, runs one computation or verification and writes
its result: JSON lines by default, ``--pretty`` for people, ``--tsv`` for tables.

Exit codes: 0 on success (and when every verified identity holds), 1 when a
verification fails, 2 on usage or domain errors.
"""

import argparse
import json
import logging
import sys

from algebra.field import FieldSpec
from curves.curvefunc import CurveRationalFunction
from curves.weierstrass import WeierstrassCurve
from divpoly.classical import DivisionPolynomials
from divpoly.context import DivisionContext
from helpers import get_version
from helpers.configparser import ConfigTree
from helpers.exceptions import *
from helpers.literals import parse_exponents, parse_json_safely, parse_point, parse_points, split_literals
from identities.__active__ import identities
from identities.engine import run_identity
from identities.suite import run_suite
from isogenies.homs import HomElement
from isogenies.isogeny import kernel_sum, velu2
from nets.consonant import find_consonant_point
from nets.net import EllipticNet, check_recurrence, check_x_relation, eds
from nets.recover import verify_recover

logger = logging.getLogger('isodiv.console')

#: the labels ``--iso`` fills in, by identity
LABEL_PARAMETERS = {'chain': ('alpha', 'beta'),
                    'pullback_lemma': ('beta',),
                    'rec1': ('alpha', 'beta', 'gamma'),
                    'rec2': ('alpha', 'beta', 'gamma', 'sigma'),
                    'rel_x': ('alpha', 'beta'),
                    'rel_x2': ('alpha', 'beta', 'sigma'),
                    'second_chain': ('beta',),
                    }

#: the parameter ``--exponents`` fills in, by identity
EXPONENT_PARAMETERS = {'pullback_lemma': 'symbols',
                       'second_chain': 'exponents',
                       }

SUCCESS, FAILED, ERROR = 0, 1, 2


class Console:
    """\
    This class parses a command line and runs the subcommand it names

    :param config: the settings tree; flags override it for one invocation
    :param out: the stream results are written to (standard output by default)
    """

    def __init__(self, config: ConfigTree, out=None):
        self.conf = config
        self.out = out if out is not None else sys.stdout
        self.parser = self.build_parser()
        self.commands = {'psi': self.psi,
                         'psi-iso': self.psi_iso,
                         'psi-hat': self.psi_hat,
                         'kernel-poly': self.kernel_poly,
                         'velu': self.velu,
                         'verify': self.verify,
                         'eds': self.eds,
                         'net': self.net,
                         'expand': self.expand,
                         }

    def build_parser(self) -> argparse.ArgumentParser:
        conf = self.conf
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--field', default=conf.Field.default, help="Q, Q(i), Fp:<p> or Fp2:<p>")
        common.add_argument('--curve', default=conf.Curve.default, help="curve literal like \"E/Q(i): [0,-1,0]\"")
        for index in (1, 2, 3):
            common.add_argument('--g{}'.format(index), default=conf.GChoices['g{}'.format(index)],
                                help="isogeny literal replacing the Vélu isogeny g{}".format(index))
        output = common.add_mutually_exclusive_group()
        output.add_argument('--json', dest='format', action='store_const', const='json', help="JSON lines")
        output.add_argument('--pretty', dest='format', action='store_const', const='pretty', help="readable text")
        output.add_argument('--tsv', dest='format', action='store_const', const='tsv', help="tab separated tables")
        common.set_defaults(format=conf.Output.format)
        common.add_argument('--precision', type=int, default=conf.Series.precision, help="terms of series at O")
        common.add_argument('--extension-ok', dest='extension_ok', action='store_true',
                            default=conf.Field.extension_ok, help="allow moving to F_{p^2}")
        common.add_argument('--no-extension', dest='extension_ok', action='store_false')

        parser = argparse.ArgumentParser(prog='isodiv', description="division polynomials for isogenies")
        parser.add_argument('--version', action='version', version='%(prog)s ' + get_version())
        commands = parser.add_subparsers(dest='command', metavar='command')
        commands.required = True

        psi = commands.add_parser('psi', parents=[common], help="the classical division polynomial")
        psi.add_argument('-n', type=int, required=True)

        psi_iso = commands.add_parser('psi-iso', parents=[common], help="the division polynomial of an isogeny")
        psi_iso.add_argument('--iso', required=True, help="isogeny literal")

        psi_hat = commands.add_parser('psi-hat', parents=[common], help="the correction factors")
        which = psi_hat.add_mutually_exclusive_group(required=True)
        which.add_argument('--index', type=int, choices=(0, 1, 2, 3))
        which.add_argument('--iso', help="isogeny literal (its kernel sum picks the index)")

        kernel = commands.add_parser('kernel-poly', parents=[common], help="the kernel polynomial")
        kernel.add_argument('--iso', required=True)

        velu = commands.add_parser('velu', parents=[common], help="the 2-isogeny with kernel {O, (x0,0)}")
        velu.add_argument('x0')

        verify = commands.add_parser('verify', parents=[common], help="check an identity")
        verify.add_argument('identity', choices=sorted(identities) + ['recover', 'suite'])
        verify.add_argument('--iso', help="comma separated labels in the order of the identity")
        verify.add_argument('--exponents', help="exponent map like \"1+i:1,1-i:1,1:-2,i:-2\"")
        verify.add_argument('--mode', choices=('biased', 'unbiased'))
        verify.add_argument('--target-scale', dest='target_scale')
        verify.add_argument('--parameters', help="JSON object of further parameters")
        verify.add_argument('--audit', action='store_true', help="re-check the divisors and leads of every Ψ")
        verify.add_argument('--point', help="P for recover; searched over F_p if omitted")
        verify.add_argument('--bound', type=int, help="radius of the compared box for recover")
        verify.add_argument('--box', type=int, default=conf.Nets.box)
        verify.add_argument('--seed', type=int, default=conf.Suite.seed)
        verify.add_argument('--count', type=int, default=conf.Suite.instances)
        verify.add_argument('--primes', default=None, help="comma separated primes for the suite")
        verify.add_argument('--label-bound', dest='label_bound', type=int, default=conf.Suite.label_bound)

        sequence = commands.add_parser('eds', parents=[common], help="an elliptic divisibility sequence")
        sequence.add_argument('--point', required=True)
        sequence.add_argument('--terms', type=int, default=conf.Nets.eds_terms)
        sequence.add_argument('--check', action='store_true', help="check the recurrences on the terms")

        net = commands.add_parser('net', parents=[common], help="the elliptic net of one or two points")
        net.add_argument('--points', required=True, help="points separated by semicolons")
        net.add_argument('--bound', type=int, default=conf.Nets.box)
        net.add_argument('--box', type=int, default=conf.Nets.box)
        net.add_argument('--check', action='store_true', help="check the recurrences on the table")

        commands.add_parser('expand', parents=[common], help="x and y as series at O")
        return parser

    def run(self, argv: list) -> int:
        """\
        :param argv: the arguments (without the program name)
        :return: the exit code
        """
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as exit:
            return exit.code
        logger.debug("Running {} with {}".format(args.command, vars(args)))
        try:
            return self.commands[args.command](args)
        except DescriptiveException as error:
            logger.error("{}: {}".format(type(error).__name__, error))
            return ERROR

    # sessions

    def curve(self, args) -> WeierstrassCurve:
        return WeierstrassCurve.parse(args.curve, FieldSpec.parse(args.field))

    def g_overrides(self, args, curve: WeierstrassCurve) -> dict:
        overrides = {}
        for index in (1, 2, 3):
            literal = getattr(args, 'g{}'.format(index))
            if literal:
                overrides[index] = HomElement.parse(literal, curve).to_isogeny()
        return overrides or None

    def session(self, args) -> DivisionContext:
        curve = self.curve(args)
        return DivisionContext(curve, g_overrides=self.g_overrides(args, curve))

    # output

    def write(self, line: str) -> None:
        print(line, file=self.out)

    def emit_value(self, args, name: str, inputs: dict, value) -> None:
        if args.format == 'json':
            self.write(json.dumps({'name': name, 'inputs': inputs, 'value': str(value)}, ensure_ascii=False))
        else:
            self.write(str(value))

    def emit_table(self, args, name: str, inputs: dict, table: dict) -> None:
        def index(v):
            return ','.join(str(entry) for entry in v)

        if args.format == 'json':
            values = {index(v): str(value) for v, value in table.items()}
            self.write(json.dumps({'name': name, 'inputs': inputs, 'values': values}, ensure_ascii=False))
        elif args.format == 'tsv':
            for v, value in table.items():
                self.write("{}\t{}".format(index(v), value))
        else:
            for v, value in table.items():
                self.write("W({}) = {}".format(index(v), value))

    def emit_report(self, args, report) -> None:
        self.write(report.pretty() if args.format == 'pretty' else report.to_json())

    # computations

    def psi(self, args) -> int:
        function = DivisionPolynomials(self.curve(args))[args.n]
        self.emit_value(args, 'psi', {'n': args.n}, CurveRationalFunction.from_function(function).format())
        return SUCCESS

    def psi_iso(self, args) -> int:
        self.emit_value(args, 'psi-iso', {'iso': args.iso}, self.session(args).psi(args.iso))
        return SUCCESS

    def psi_hat(self, args) -> int:
        context = self.session(args)
        if args.iso is not None:
            value, inputs = context.psi_hat_of(args.iso), {'iso': args.iso}
        else:
            value, inputs = context.psi_hat(args.index), {'index': args.index}
        self.emit_value(args, 'psi-hat', inputs, value)
        return SUCCESS

    def kernel_poly(self, args) -> int:
        phi = self.session(args).isogeny(args.iso)
        self.emit_value(args, 'kernel-poly', {'iso': args.iso}, phi.kernel_polynomial().format())
        return SUCCESS

    def velu(self, args) -> int:
        curve = self.curve(args)
        phi = velu2(curve, curve.point(curve.spec.parse_element(args.x0), 0))
        point, index = kernel_sum(phi)
        if args.format == 'json':
            self.write(json.dumps({'name': 'velu', 'inputs': {'x0': args.x0}, 'label': str(phi),
                                   'maps': phi.describe(), 'target': str(phi.target), 'degree': phi.degree,
                                   'kernel_sum': str(point), 'index': index}, ensure_ascii=False))
        else:
            self.write("{}: {} → {}".format(phi, curve, phi.target))
            self.write(phi.describe())
        return SUCCESS

    def expand(self, args) -> int:
        x, y = self.curve(args).expand_coordinates(args.precision)
        if args.format == 'json':
            self.write(json.dumps({'name': 'expand', 'inputs': {'precision': args.precision},
                                   'x': str(x), 'y': str(y)}, ensure_ascii=False))
        else:
            self.write("x = {}".format(x))
            self.write("y = {}".format(y))
        return SUCCESS

    # verification

    def identity_parameters(self, args, name: str) -> dict:
        """the parameters of a registered identity from ``--parameters``, ``--iso``, ``--exponents`` and ``--mode``"""
        parameters = parse_json_safely(args.parameters)
        if args.iso:
            labels = split_literals(args.iso)
            names = LABEL_PARAMETERS[name]
            if len(labels) > len(names):
                raise InvalidParameters("{} takes the labels {}, got {}".format(name, ', '.join(names), args.iso))
            parameters.update(zip(names, labels))
        if args.exponents:
            if name not in EXPONENT_PARAMETERS:
                raise InvalidParameters("{} takes no exponent map".format(name))
            parameters[EXPONENT_PARAMETERS[name]] = parse_exponents(args.exponents)
        if args.mode:
            parameters['mode'] = args.mode
        if args.target_scale:
            parameters['target_scale'] = args.target_scale
        return parameters

    def verify(self, args) -> int:
        if args.identity == 'suite':
            return self.verify_suite(args)
        if args.identity == 'recover':
            return self.verify_recover(args)
        context = self.session(args)
        report = run_identity(args.identity, context, self.identity_parameters(args, args.identity),
                              args.extension_ok)
        self.emit_report(args, report)
        if args.audit:
            audited, failed = context.audit(args.precision)
            logger.info("Audited {} division polynomials, {} failed".format(audited, failed))
            if failed:
                return FAILED
        return SUCCESS if report.equal else FAILED

    def verify_suite(self, args) -> int:
        primes = self.conf.Suite.primes
        if args.primes is not None:
            try:
                primes = [int(prime) for prime in split_literals(args.primes)]
            except ValueError:
                raise InvalidParameters.malformed('prime list', args.primes)
        results = run_suite(primes, args.count, args.seed, args.label_bound, self.conf.Suite.identities,
                            args.extension_ok)
        for result in results:
            self.write(result.pretty() if args.format == 'pretty' else result.to_json())
        return SUCCESS if all(result.ok for result in results) else FAILED

    def verify_recover(self, args) -> int:
        if not args.iso:
            raise InvalidParameters.missing('iso')
        labels = split_literals(args.iso)
        curve = self.curve(args)
        if args.point:
            point = parse_point(curve, args.point)
        else:
            if not curve.spec.is_finite:
                curve = reduce_curve(curve, self.conf.Nets.consonant_prime)
            overrides = self.g_overrides(args, curve)
            point = find_consonant_point(curve, labels, args.box, overrides)
        report = verify_recover(labels, point, args.bound, self.g_overrides(args, curve), args.extension_ok,
                                args.box)
        self.emit_report(args, report)
        return SUCCESS if report.equal else FAILED

    # nets

    def eds(self, args) -> int:
        curve = self.curve(args)
        point = parse_point(curve, args.point)
        sequence = eds(curve, point, args.terms)
        self.emit_table(args, 'eds', {'point': str(point), 'terms': args.terms},
                        {(n,): sequence[n] for n in range(1, args.terms + 1)})
        if args.check:
            return self.check(sequence, max(1, args.terms // 2))
        return SUCCESS

    def net(self, args) -> int:
        curve = self.curve(args)
        points = parse_points(curve, args.points)
        net = EllipticNet.from_points(curve, points, args.box)
        self.emit_table(args, 'net', {'points': [str(point) for point in points], 'bound': args.bound},
                        net.table(args.bound))
        if args.check:
            return self.check(net, max(1, args.bound // 2))
        return SUCCESS

    def check(self, net: EllipticNet, bound: int) -> int:
        recurrence, relation = check_recurrence(net, bound), check_x_relation(net, bound)
        logger.info("{} and {} on the box of radius {}".format(recurrence, relation, bound))
        if recurrence and relation:
            return SUCCESS
        logger.error("The net fails {} recurrence and {} relation instances"
                     .format(len(recurrence.failures), len(relation.failures)))
        return FAILED


def reduce_curve(curve: WeierstrassCurve, prime: int) -> WeierstrassCurve:
    """\
    the reduction of a curve with rational coefficients modulo p

    :raises InvalidParameters: if a coefficient is not rational
    """
    spec = FieldSpec('Fp', prime)
    coefficients = []
    for coefficient in (curve.A2, curve.A4, curve.A6):
        a, b = coefficient.components()
        if b:
            raise InvalidParameters("Cannot reduce {} modulo {}".format(curve, prime))
        coefficients.append(spec(a))
    logger.info("Reducing {} modulo {}".format(curve, prime))
    return WeierstrassCurve(spec, *coefficients)
