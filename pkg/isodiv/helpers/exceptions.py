# Exceptions for isodiv
# licensed under the GNU Public License, version 2

"""This module defines the exception classes specific to isodiv:"""


class DescriptiveException(Exception):
    """\
    This type of exception must contain a value (usually a string)
    that is used as the string representation of the exception
    """

    def __init__(self, value):
        super().__init__(value)
        self.value = value

    def __str__(self) -> str:
        return str(self.value)


class InvalidConf(DescriptiveException):
    """\
    Use if something in the configuration will not work
    for what the user has chosen in the config file.
    """

    pass


class InvalidParameters(DescriptiveException):
    """\
    Use when given parameters or literals are not valid
    """

    @staticmethod
    def unknown(param_name: str = None):
        """builds the exception for a parameter nobody asked for"""
        if param_name:
            debug_str = "Parameter \"{name}\" is unknown!".format(name=param_name)
        else:
            debug_str = "Parameter is unknown!"
        return InvalidParameters(debug_str)

    @staticmethod
    def missing(param_name: str = None):
        """builds the exception for a required parameter that was not given"""
        if param_name:
            debug_str = "Parameter \"{name}\" is missing!".format(name=param_name)
        else:
            debug_str = "Parameter is missing!"
        return InvalidParameters(debug_str)

    @staticmethod
    def malformed(kind: str, text: str, detail: str = None):
        """builds the exception for a literal that cannot be parsed"""
        debug_str = "Malformed {kind} literal \"{text}\"".format(kind=kind, text=text)
        if detail:
            debug_str += ": {}".format(detail)
        return InvalidParameters(debug_str)


class InvalidField(DescriptiveException):
    """\
    Use for unsupported fields (characteristic 2, composite moduli)
    and for arithmetic that mixes elements of different fields.
    """

    @staticmethod
    def mismatch(left, right):
        return InvalidField("Cannot combine elements of {} and {}".format(left, right))


class InvalidCurve(DescriptiveException):
    """\
    Use if a Weierstrass model is singular or if points/functions
    of different curves are combined.
    """

    @staticmethod
    def mismatch(left, right):
        return InvalidCurve("Curves do not match: {} vs. {}".format(left, right))


class InvalidIsogeny(DescriptiveException):
    """\
    Use if an isogeny cannot be built or combined as requested

    **For example:** Gaussian multiplication on a curve without CM by i
    """

    pass


class ExtensionRequired(DescriptiveException):
    """\
    Use if a root, point or scalar needed by a computation
    does not exist in the working field.
    The caller may retry over a quadratic extension.
    """

    def __init__(self, value, field=None):
        super().__init__(value)
        self.field = field


class NonPrincipal(DescriptiveException):
    """\
    Use if the image divisor of a kernel symbol sum is not principal.
    The offending kernel sum (a point) and the total degree are kept.
    """

    def __init__(self, value, kernel_sum=None, degree=None):
        super().__init__(value)
        self.kernel_sum = kernel_sum
        self.degree = degree


class Indeterminate(DescriptiveException):
    """\
    Use if a value cannot be determined from the available data:
    0/0 evaluations, series that lack precision, or zero divisors
    while reducing a net index (``index`` holds the blocking index).
    """

    def __init__(self, value, index=None):
        super().__init__(value)
        self.index = index


class DegenerateInput(DescriptiveException):
    """\
    Use if the inputs of an identity violate its hypotheses

    **For example:** α = ±β in the relation to x
    """

    @staticmethod
    def zero_label(label, where: str = None):
        if where:
            return DegenerateInput("Label \"{}\" is zero in {}".format(label, where))
        return DegenerateInput("Label \"{}\" is zero".format(label))
