# isodiv - Command Line Literals
# licensed under the GNU Public License, version 2

"""A couple of helper functions for reading command line arguments"""

import json
import logging

from curves.weierstrass import Point, WeierstrassCurve
from helpers.exceptions import InvalidParameters

logger = logging.getLogger('isodiv.helpers.literals')


def split_literals(text: str, separator: str = ',') -> list:
    """\
    splits a list of literals at the separators outside of parentheses,
    so ``"velu2@(1,0),1+i"`` gives ``['velu2@(1,0)', '1+i']``

    :param text: string to be split
    :param separator: a single character
    :return: the stripped, non-empty parts
    """
    parts, current, depth = [], [], 0
    for character in text:
        if character == '(':
            depth += 1
        elif character == ')':
            depth -= 1
            if depth < 0:
                raise InvalidParameters.malformed('list', text, "unbalanced parentheses")
        if character == separator and not depth:
            parts.append(''.join(current))
            current = []
        else:
            current.append(character)
    if depth:
        raise InvalidParameters.malformed('list', text, "unbalanced parentheses")
    parts.append(''.join(current))
    return [part.strip() for part in parts if part.strip()]


def parse_exponents(text: str) -> dict:
    """\
    reads exponent maps like ``"1+i:1, 1-i:1, 1:-2, i:-2"``

    :return: map from label literals to integers (repeated labels are added up)
    """
    exponents = {}
    for part in split_literals(text):
        label, colon, n = part.rpartition(':')
        if not colon or not label.strip():
            raise InvalidParameters.malformed('exponents', text, "expected label:n pairs")
        try:
            n = int(n)
        except ValueError:
            raise InvalidParameters.malformed('exponents', text, "{} is no integer".format(n))
        exponents[label.strip()] = exponents.get(label.strip(), 0) + n
    if not exponents:
        raise InvalidParameters.malformed('exponents', text, "no entries")
    return exponents


def parse_point(curve: WeierstrassCurve, text: str) -> Point:
    """\
    reads ``"(x,y)"`` or ``"x,y"`` with coordinates in the literal syntax of the curve's field

    :raises InvalidParameters: if the literal is malformed
    :raises InvalidCurve: if the point is not on the curve
    """
    stripped = text.strip()
    if stripped.startswith('(') and stripped.endswith(')'):
        stripped = stripped[1:-1]
    parts = split_literals(stripped)
    if len(parts) != 2:
        raise InvalidParameters.malformed('point', text, "expected (x,y)")
    spec = curve.spec
    return curve.point(spec.parse_element(parts[0]), spec.parse_element(parts[1]))


def parse_points(curve: WeierstrassCurve, text: str) -> list:
    """reads points separated by semicolons"""
    return [parse_point(curve, part) for part in split_literals(text, ';')]


def parse_json_safely(payload: str) -> dict:
    """\
    parse a string as JSON object

    :param payload: string to be parsed
    :return: parsed JSON object (as dict)
    :raises InvalidParameters: if the payload is no JSON object
    """
    if not payload:
        logger.debug("Payload is empty!")
        return {}
    try:
        unpacked = json.loads(payload)
    except ValueError as error:
        raise InvalidParameters("Could not parse the parameters {}: {}".format(payload, error))
    if type(unpacked) is not dict:
        raise InvalidParameters("The parameters {} are not a JSON object".format(payload))
    return unpacked
