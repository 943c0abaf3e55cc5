# isodiv - Verify Parameters
# licensed under the GNU Public License, version 2

"""\
Functions that validate input parameters, raising
:py:class:`helpers.exceptions.InvalidParameters` if the input does not fit the requirements.

Every validator returns :py:data:`None` on success, so they can be registered as
identity parameter verifiers (see :py:meth:`identities.templates.base.Identity.register`).
"""

import sympy

from helpers.exceptions import InvalidParameters


def _reject(candidate, param_name: str, requirement: str):
    if param_name:
        subject = "Parameter \"{name}\"".format(name=param_name)
    else:
        subject = "Parameter"
    raise InvalidParameters("{} must be {}! (got: {})".format(subject, requirement, candidate))


def _is_int(candidate) -> bool:
    return type(candidate) is int  # excludes bool


def integer(candidate, param_name: str = None, minimum: int = None, maximum: int = None):
    """
    integer (between minimum and maximum)

    :param candidate: the object to be tested
    :param param_name: name of the parameter (to be included in the error message)
    :param minimum: minimum
    :param maximum: maximum
    """
    if minimum is not None and maximum is not None:
        requirement = "an integer between {} and {}".format(minimum, maximum)
    elif minimum is not None:
        requirement = "an integer >= {}".format(minimum)
    elif maximum is not None:
        requirement = "an integer <= {}".format(maximum)
    else:
        requirement = "an integer"

    if not _is_int(candidate) \
            or (minimum is not None and candidate < minimum) \
            or (maximum is not None and candidate > maximum):
        _reject(candidate, param_name, requirement)


def positive_integer(candidate, param_name: str = None):
    """a positive integer => 1,2,3,..."""
    if not _is_int(candidate) or candidate <= 0:
        _reject(candidate, param_name, "a positive integer")


def boolean(candidate, param_name: str = None):
    """a boolean value: True or False"""
    if type(candidate) is not bool:
        _reject(candidate, param_name, "boolean (True or False)")


def odd_prime(candidate, param_name: str = None):
    """
    a prime number >= 3, usable as the modulus of a prime field

    :param candidate: the object to be tested
    :param param_name: name of the parameter (to be included in the error message)
    """
    if not _is_int(candidate) or candidate < 3 or not sympy.isprime(candidate):
        _reject(candidate, param_name, "an odd prime")


def precision(candidate, param_name: str = 'precision'):
    """number of series terms: an integer >= 1"""
    integer(candidate, param_name=param_name, minimum=1)


def two_torsion_index(candidate, param_name: str = 'index'):
    """index into the fixed ordering of E[2], 0 standing for the identity"""
    integer(candidate, param_name=param_name, minimum=0, maximum=3)


def choice(candidate, param_name: str = None, options: tuple = ()):
    """
    one of a fixed set of options

    :param candidate: the object to be tested
    :param param_name: name of the parameter (to be included in the error message)
    :param options: the allowed values
    """
    if candidate not in options:
        _reject(candidate, param_name, "one of {}".format(', '.join(str(option) for option in options)))


def exponent_map(candidate, param_name: str = None):
    """a non-empty map from labels to integers"""
    if type(candidate) is not dict or not candidate or not all(_is_int(n) for n in candidate.values()):
        _reject(candidate, param_name, "a map from labels to integers")
