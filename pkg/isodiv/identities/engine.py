# isodiv - Identity Engine
# licensed under the GNU Public License, version 2

"""\
Runs registered identities by name. Over a prime field, a check that needs a
root the field does not contain (most often √−1 for a Gaussian label) is
repeated over F_{p²}, and the report says so.
"""

import logging

from divpoly.context import DivisionContext
from helpers.exceptions import ExtensionRequired, InvalidField, InvalidParameters
from identities.__active__ import identities
from identities.report import IdentityReport
from isogenies.homs import HomElement

logger = logging.getLogger('isodiv.identities.engine')


def identity_class(name: str):
    """\
    :raises InvalidParameters: for names that are not registered
    """
    try:
        return identities[name]
    except KeyError:
        raise InvalidParameters("Identity \"{}\" is unknown (known: {})".format(name, ', '.join(sorted(identities))))


def run_identity(name: str, context: DivisionContext, parameters: dict, extension_ok: bool = True) -> IdentityReport:
    """\
    :param name: registered name of the identity
    :param context: the session to compute in
    :param parameters: inputs of the identity, labels as literals or :py:class:`isogenies.homs.HomElement`
    :param extension_ok: whether to retry over F_{p²}
    :raises ExtensionRequired: if a root is missing and no retry is possible
    """
    cls = identity_class(name)
    try:
        return cls(context, parameters).verify()
    except ExtensionRequired as error:
        if not extension_ok:
            raise
        try:
            spec = context.curve.spec.quadratic_extension()
        except InvalidField:
            raise error
        portable = _portable(parameters, context.curve)
        if portable is None:
            raise error
        logger.warning("{} over {}: {}; retrying over {}".format(name, context.curve.spec, error, spec))
        report = cls(context.base_change(spec), portable).verify()
        report.retried = True
        return report


def _portable(parameters: dict, curve) -> dict:
    """the parameters with labels as literals, or ``None`` if something cannot be re-read over another field"""
    portable = {}
    for key, value in parameters.items():
        if isinstance(value, HomElement):
            if value.curve != curve:
                return None
            value = str(value)
        elif isinstance(value, dict):
            value = {str(label): n for label, n in value.items()}
        elif value is not None and not isinstance(value, (str, int)):
            return None
        portable[key] = value
    return portable


def verify_chain(context: DivisionContext, alpha, beta, mode: str = 'biased', target_scale=None,
                 extension_ok: bool = True) -> IdentityReport:
    """the chain rule for α∘β; ``mode`` is ``unbiased`` or ``biased``"""
    return run_identity('chain', context, {'alpha': alpha, 'beta': beta, 'mode': mode,
                                           'target_scale': target_scale}, extension_ok)


def verify_second_chain(context: DivisionContext, exponents: dict, beta, extension_ok: bool = True) -> IdentityReport:
    return run_identity('second_chain', context, {'exponents': exponents, 'beta': beta}, extension_ok)


def verify_rel_x(context: DivisionContext, alpha, beta, extension_ok: bool = True) -> IdentityReport:
    return run_identity('rel_x', context, {'alpha': alpha, 'beta': beta}, extension_ok)


def verify_rec1(context: DivisionContext, alpha, beta, gamma, extension_ok: bool = True) -> IdentityReport:
    return run_identity('rec1', context, {'alpha': alpha, 'beta': beta, 'gamma': gamma}, extension_ok)


def verify_rel_x2(context: DivisionContext, alpha, beta, sigma, extension_ok: bool = True) -> IdentityReport:
    return run_identity('rel_x2', context, {'alpha': alpha, 'beta': beta, 'sigma': sigma}, extension_ok)


def verify_rec2(context: DivisionContext, alpha, beta, gamma, sigma, extension_ok: bool = True) -> IdentityReport:
    return run_identity('rec2', context, {'alpha': alpha, 'beta': beta, 'gamma': gamma, 'sigma': sigma},
                        extension_ok)


def verify_pullback_lemma(context: DivisionContext, symbols, beta, extension_ok: bool = True) -> IdentityReport:
    """\
    :param symbols: a :py:class:`divpoly.kernel.KernelSymbolSum` or a map ``{label: n}`` for ``∏ Ψ_label^n``
    """
    return run_identity('pullback_lemma', context, {'symbols': symbols, 'beta': beta}, extension_ok)
