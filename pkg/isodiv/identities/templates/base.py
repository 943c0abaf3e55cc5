# Identity base template
# licensed under the GNU Public License, version 2

from abc import ABCMeta, abstractmethod
import logging

from curves.curvefunc import CurveRationalFunction
from divpoly.context import DivisionContext
from helpers import verify
from helpers.exceptions import *
from identities.report import IdentityReport
from isogenies.homs import HomElement
from isogenies.isogeny import Isogeny


class IdentityParameters:
    """\
    A collection of maps for the inputs of an identity which store their:

       - current values
       - preprocessor method references
       - verifier method references

    """

    def __init__(self):
        self.value = {}  #: maps the parameter names to their current values
        self.verifier = {}  #: maps the parameter names to their verifier functions
        self.preprocessor = {}  #: maps the parameter names to their preprocessor functions
        self.required = set()  #: names of the parameters that must be set before a check


class Identity(metaclass=ABCMeta):
    """\
    This class defines the interface and the helpers for identities between
    division polynomials. Both sides are computed exactly in a
    :py:class:`divpoly.context.DivisionContext` and compared as canonical forms.

    :param context: the curve, scaling and caches to compute in
    :param parameters: A :py:class:`dict` mapping parameter names to values,
                       for example: ::

                           parameters = {'alpha': '1+i', 'beta': 'i'}
    """

    # Attributes
    name = None  #: the name the identity is registered under

    p = None  #: The object that stores all inputs
    logger = None  #: The logger object this identity will use for debug output
    context = None  #: the :py:class:`divpoly.context.DivisionContext` both sides are computed in

    def __init__(self, context: DivisionContext, parameters: dict):
        self.logger = logging.getLogger('isodiv.identities.' + self.name)
        self.context = context
        self.p = IdentityParameters()
        self.init_parameters()
        self.apply_parameter_set(parameters)

    @property
    def curve(self):
        return self.context.curve

    def register(self, parameter_name: str, default_val, verifier, args: list = None, kwargs: dict = None,
                 preprocessor=None, required: bool = True) -> None:
        """\
        Registers a new input with its verifier, so it can be set by the engine and the command line.

        :param parameter_name: name of the parameter. You access the parameter via self.p.value[parameter_name].
        :param default_val: initializer value of the parameter.
                            *Note that this value will not be checked by the verifier function!*
        :param verifier: called as :samp:`{verifier}(new_value, param_name, *args, **kwargs)` before the
                         parameter is set; raises an exception if the value does not fit
        :param args: further positional arguments of the verifier
        :param kwargs: further keyword arguments of the verifier
        :param preprocessor: before the validation in set_parameter :samp:`value = {preprocessor}(value)` will be called
        :param required: whether the check refuses to run while the value is ``None``
        """
        if args is None:
            args = []
        if kwargs is None:
            kwargs = {}

        def empty_preprocessor(val):
            return val

        if preprocessor is None:
            preprocessor = empty_preprocessor

        if parameter_name in self.p.value:
            raise InvalidParameters("Parameter {} was already registered".format(parameter_name))

        self.p.value[parameter_name] = default_val
        self.p.verifier[parameter_name] = (verifier, args, kwargs)
        self.p.preprocessor[parameter_name] = preprocessor
        if required:
            self.p.required.add(parameter_name)

    def apply_parameter_set(self, parameters: dict) -> None:
        """\
        Applies a set of parameters to the identity.

        :param parameters: map from parameter names to values
        :raises InvalidParameters: for unknown names or values their verifier rejects
        """
        if type(parameters) is not dict:
            raise InvalidParameters("Parameters must be given as a map like this: " +
                                    "{\"alpha\": \"1+i\", \"beta\": \"i\"}  " +
                                    "(instead received: " + str(parameters) + " ).")
        for param_name in parameters:
            self.set_parameter(param_name, parameters[param_name])

    def set_parameter(self, param_name: str, value) -> None:
        """\
        Take a parameter by name and new value and store it to p.value.

        :param param_name: name of the parameter to be stored
        :param value: new value of the parameter to be stored
        """
        if param_name not in self.p.verifier:
            raise InvalidParameters.unknown(param_name)

        preprocessor = self.p.preprocessor[param_name]
        value = preprocessor(value)

        verifier, args, kwargs = self.p.verifier[param_name]
        verifier(value, param_name, *args, **kwargs)
        self.p.value[param_name] = value

    def inputs(self) -> dict:
        """the parameters as printable strings"""
        return {name: _printable(value) for name, value in self.p.value.items()}

    def verify(self) -> IdentityReport:
        """\
        computes both sides and compares them

        :raises DegenerateInput: if the inputs violate the hypotheses of the identity
        """
        for name in sorted(self.p.required):
            if self.p.value[name] is None:
                raise InvalidParameters.missing(name)
        self.check_runnable()
        lhs, rhs = self.sides()
        report = IdentityReport(self.name, self.inputs(), lhs, rhs, field=self.curve.spec)
        self.logger.info("{}: {}".format(self.name, 'equal' if report.equal else 'NOT equal'))
        return report

    # preprocessors and verifiers for labels

    def as_label(self, value) -> HomElement:
        """parses label literals; labels on another curve are rejected"""
        if isinstance(value, str):
            return self.context.label(value)
        if isinstance(value, HomElement) and value.curve != self.curve:
            raise InvalidCurve.mismatch(self.curve, value.curve)
        return value

    def as_map(self, value):
        """\
        parses label literals on the base curve; isogenies and labels on other
        curves are kept, so a map E″ → E can be given
        """
        if isinstance(value, str):
            return self.context.label(value)
        return value

    def as_exponents(self, value) -> dict:
        """parses the keys of an exponent map and merges repeated labels"""
        if type(value) is not dict:
            return value
        exponents = {}
        for label, n in value.items():
            label = self.as_label(label)
            exponents[label] = exponents.get(label, 0) + n
        return exponents

    @staticmethod
    def nonzero_label(candidate, param_name: str = None):
        if not isinstance(candidate, HomElement):
            raise InvalidParameters("Parameter \"{}\" must be an isogeny label! (got: {})"
                                    .format(param_name, candidate))
        if candidate.is_zero:
            raise DegenerateInput.zero_label(candidate, param_name)

    @classmethod
    def nonzero_map(cls, candidate, param_name: str = None):
        """a nonzero label or an explicit isogeny"""
        if not isinstance(candidate, Isogeny):
            cls.nonzero_label(candidate, param_name)

    def require_nonzero(self, labels: dict) -> None:
        """\
        :param labels: map from a description (e.g. ``'α+β'``) to the label it stands for
        :raises DegenerateInput: if one of them is zero
        """
        for where, label in labels.items():
            if label.is_zero:
                raise DegenerateInput.zero_label(label, where)

    def require_common_basis(self, *labels) -> None:
        """\
        :raises DegenerateInput: if the labels cannot be added
        """
        first = labels[0]
        for label in labels[1:]:
            if label.curve != first.curve or label.basis != first.basis:
                raise DegenerateInput("Labels {} and {} are not in a common basis".format(first, label))

    def require_endomorphism(self, label, param_name: str) -> None:
        """\
        :raises DegenerateInput: if the label does not map the base curve to itself
        """
        if label.curve != self.curve or label.target != self.curve:
            raise DegenerateInput("Parameter \"{}\" must be an endomorphism of {}, got {}: {} → {}"
                                  .format(param_name, self.curve, label, label.curve, label.target))

    def require_into_base(self, label, param_name: str) -> None:
        """\
        :raises DegenerateInput: if the label or isogeny does not end on the base curve
        """
        if label.target != self.curve:
            source = label.source if isinstance(label, Isogeny) else label.curve
            raise DegenerateInput("Parameter \"{}\" must map into {}, got {}: {} → {}"
                                  .format(param_name, self.curve, label, source, label.target))

    # building blocks of both sides

    def psi(self, label) -> CurveRationalFunction:
        return self.context.psi(label).value

    def hat(self, label) -> CurveRationalFunction:
        return self.context.psi_hat_of(label).value

    def x_after(self, label) -> CurveRationalFunction:
        """x′∘φ"""
        return self.context.isogeny(label).x_map

    def y_after(self, label) -> CurveRationalFunction:
        """y′∘φ"""
        return self.context.isogeny(label).y_map

    def pullback(self, function: CurveRationalFunction, label) -> CurveRationalFunction:
        return function.pullback(self.context.isogeny(label))

    def quadratic_combination(self, exponents: dict) -> CurveRationalFunction:
        """\
        ``∏ Ψ_φ^(e_φ) · √(∏ Ψ̂_φ^(−e_φ))``, well defined when e is a quadratic identity

        :raises DegenerateInput: if it is not
        """
        value = CurveRationalFunction.constant(self.curve, 1)
        for label, n in exponents.items():
            if n:
                value = value * self.psi(label) ** n
        root = self.context.sqrt_hat_product({label: -n for label, n in exponents.items()})
        return value * root.value

    # next we have the abstract methods that classes MUST implement:

    @abstractmethod
    def init_parameters(self) -> None:
        """\
        Identities register their inputs here.
        This function is called at initialization of a new identity object.
        """
        pass

    @abstractmethod
    def check_runnable(self) -> None:
        """\
        Raise an exception (DegenerateInput or InvalidParameters) if the inputs
        violate the hypotheses of the identity
        """
        raise NotImplementedError

    @abstractmethod
    def sides(self) -> tuple:
        """\
        :return: ``(lhs, rhs)`` as :py:class:`curves.curvefunc.CurveRationalFunction`
        """
        raise NotImplementedError


def _printable(value):
    if isinstance(value, dict):
        return {str(key): n for key, n in value.items()}
    if value is None or isinstance(value, (int, bool)):
        return value
    return str(value)
