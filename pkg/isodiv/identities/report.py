# isodiv - Identity Reports
# licensed under the GNU Public License, version 2

import json

from curves.curvefunc import CurveRationalFunction


class IdentityReport:
    """\
    The outcome of one identity check.

    :param name: the registered name of the identity
    :param inputs: its parameters as printable values
    :param lhs: left-hand side
    :param rhs: right-hand side
    :param field: the field both sides were computed over
    :param retried: whether the check had to move to a quadratic extension
    """

    def __init__(self, name: str, inputs: dict, lhs: CurveRationalFunction, rhs: CurveRationalFunction,
                 field=None, retried: bool = False):
        self.name = name
        self.inputs = inputs
        self.lhs = lhs
        self.rhs = rhs
        self.field = field if field is not None else lhs.curve.spec
        self.retried = retried
        self.equal = lhs == rhs

    @property
    def discrepancy(self):
        """``lhs/rhs`` (``lhs − rhs`` if the right side vanishes), or ``None`` if both sides agree"""
        if self.equal:
            return None
        if self.rhs.is_zero or self.lhs.is_zero:
            return self.lhs - self.rhs
        return self.lhs / self.rhs

    def as_dict(self) -> dict:
        data = {'name': self.name,
                'inputs': self.inputs,
                'equal': self.equal,
                'field': str(self.field),
                'lhs': str(self.lhs),
                'rhs': str(self.rhs)}
        if self.retried:
            data['retried'] = True
        if not self.equal:
            data['discrepancy'] = str(self.discrepancy)
        return data

    def to_json(self) -> str:
        """one JSON line"""
        return json.dumps(self.as_dict(), ensure_ascii=False)

    def pretty(self) -> str:
        lines = ["{} {} over {}{}".format(self.name, 'holds' if self.equal else 'FAILS', self.field,
                                          ' (extension)' if self.retried else '')]
        for key, value in self.inputs.items():
            lines.append("  {} = {}".format(key, value))
        lines.append("  lhs = {}".format(self.lhs))
        lines.append("  rhs = {}".format(self.rhs))
        if not self.equal:
            lines.append("  discrepancy = {}".format(self.discrepancy))
        return '\n'.join(lines)

    def __bool__(self):
        return self.equal

    def __repr__(self):
        return "<IdentityReport {} {}>".format(self.name, 'equal' if self.equal else 'unequal')


class TableReport(IdentityReport):
    """\
    A report whose sides are tables ``{index: value}`` of field elements.

    :param field: required, the tables carry no curve
    """

    def __init__(self, name: str, inputs: dict, lhs: dict, rhs: dict, field, retried: bool = False):
        super().__init__(name, inputs, lhs, rhs, field, retried)

    @property
    def discrepancy(self):
        """the indices where the tables differ, with both values"""
        if self.equal:
            return None
        return {index: (self.lhs.get(index), self.rhs.get(index))
                for index in sorted(set(self.lhs) | set(self.rhs))
                if self.lhs.get(index) != self.rhs.get(index)}

    @staticmethod
    def _strings(table: dict) -> dict:
        return {_index(index): str(value) for index, value in table.items()}

    def as_dict(self) -> dict:
        data = {'name': self.name,
                'inputs': self.inputs,
                'equal': self.equal,
                'field': str(self.field),
                'lhs': self._strings(self.lhs),
                'rhs': self._strings(self.rhs)}
        if self.retried:
            data['retried'] = True
        if not self.equal:
            data['discrepancy'] = {_index(index): [str(left), str(right)]
                                   for index, (left, right) in self.discrepancy.items()}
        return data

    def pretty(self) -> str:
        lines = ["{} {} over {}{}".format(self.name, 'holds' if self.equal else 'FAILS', self.field,
                                          ' (extension)' if self.retried else '')]
        for key, value in self.inputs.items():
            lines.append("  {} = {}".format(key, value))
        lines.append("  {} values compared".format(len(self.lhs)))
        if not self.equal:
            for index, (left, right) in self.discrepancy.items():
                lines.append("  W({}): {} != {}".format(_index(index), left, right))
        return '\n'.join(lines)


def _index(index) -> str:
    if isinstance(index, tuple):
        return ','.join(str(entry) for entry in index)
    return str(index)
