# isodiv - Literal Expressions
# licensed under the GNU Public License, version 2

"""\
A small recursive-descent evaluator for the literal syntax shared by field
elements, curve coefficients and curve functions::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom (('^' | '**') ['-'] INTEGER)?
    atom   := INTEGER | NAME | '(' expr ')'

An integer immediately followed by a name multiplies it (``2i`` is ``2*i``).
Names are looked up in a caller-supplied environment, so the same grammar
evaluates to field elements, polynomials or curve functions.
"""

import re

from helpers.exceptions import InvalidParameters

_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))')


def tokenize(text: str) -> list:
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        if not match:
            raise InvalidParameters.malformed('expression', text, "unexpected \"{}\"".format(text[position:]))
        number, name, operator = match.groups()
        if number is not None:
            tokens.append(('int', int(number)))
        elif name is not None:
            if tokens and tokens[-1][0] == 'int' and match.start(2) == match.start():
                tokens.append(('op', '*'))
            tokens.append(('name', name))
        else:
            tokens.append(('op', '^' if operator == '**' else operator))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str, constant, names: dict):
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0
        self.constant = constant
        self.names = names

    def fail(self, detail: str):
        raise InvalidParameters.malformed('expression', self.text, detail)

    def peek(self):
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None, None

    def take(self):
        token = self.peek()
        self.position += 1
        return token

    def expect(self, operator: str):
        if self.take() != ('op', operator):
            self.fail("expected \"{}\"".format(operator))

    def parse(self):
        value = self.expr()
        if self.position != len(self.tokens):
            self.fail("trailing input")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (('op', '+'), ('op', '-')):
            _, operator = self.take()
            other = self.term()
            value = value + other if operator == '+' else value - other
        return value

    def term(self):
        value = self.unary()
        while self.peek() in (('op', '*'), ('op', '/')):
            _, operator = self.take()
            other = self.unary()
            if operator == '*':
                value = value * other
            else:
                try:
                    value = value / other
                except ZeroDivisionError:
                    self.fail("division by zero")
        return value

    def unary(self):
        if self.peek() == ('op', '-'):
            self.take()
            return -self.unary()
        if self.peek() == ('op', '+'):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        value = self.atom()
        if self.peek() == ('op', '^'):
            self.take()
            sign = 1
            if self.peek() == ('op', '-'):
                self.take()
                sign = -1
            kind, exponent = self.take()
            if kind != 'int':
                self.fail("exponents must be integers")
            value = value ** (sign * exponent)
        return value

    def atom(self):
        kind, value = self.take()
        if kind == 'int':
            return self.constant(value)
        if kind == 'name':
            if value not in self.names or self.names[value] is None:
                self.fail("unknown name \"{}\"".format(value))
            return self.names[value]
        if (kind, value) == ('op', '('):
            inner = self.expr()
            self.expect(')')
            return inner
        self.fail("unexpected end of input" if kind is None else "unexpected \"{}\"".format(value))


def evaluate(text: str, constant, names: dict = None):
    """\
    evaluates a literal expression

    :param text: the literal
    :param constant: converts an integer into the value type (e.g. a :py:class:`FieldSpec`)
    :param names: environment of named values (``x``, ``y``, ``i``, ...)
    :return: whatever the operators of the environment's values produce
    """
    return _Parser(text, constant, names or {}).parse()
