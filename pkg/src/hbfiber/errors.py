"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command line front end:
2 for input errors, 3 for hypothesis failures, 5 for internal anomalies.
"""


class HBFiberError(Exception):
    exit_code = 1
    code = "error"


class InputError(HBFiberError):
    exit_code = 2
    code = "input"


class ParseError(InputError):
    code = "syntax"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        super().__init__(where + message)


class UnknownVariable(ParseError):
    code = "unknown-variable"


class NotEquigenerated(InputError):
    code = "not-equigenerated"


class NotHomogeneous(HBFiberError):
    code = "not-homogeneous"


class InexactDivision(HBFiberError):
    code = "inexact-division"


class HypothesisFailure(HBFiberError):
    exit_code = 3
    code = "hypothesis"


class NotHeightTwo(HypothesisFailure):
    code = "not-height-two"

    def __init__(self, height):
        self.height = height
        super().__init__(f"ideal has height {height}, not 2")


class MinorMismatch(HypothesisFailure):
    code = "minor-mismatch"


class TooFewSyzygies(HypothesisFailure):
    code = "too-few-syzygies"


class NotMinimal(HypothesisFailure):
    code = "not-minimal"


class GConditionFailed(HypothesisFailure):
    code = "g-condition"


class DegreeMismatch(HypothesisFailure):
    code = "degree-mismatch"


class UnitIdeal(HBFiberError):
    """Raised where a proper ideal is required; the height is infinite."""

    code = "unit-ideal"
    height = float("inf")


class InternalAnomaly(HBFiberError):
    exit_code = 5
    code = "anomaly"


class DimensionAnomaly(InternalAnomaly):
    code = "dimension-anomaly"


class NonIntegralDegree(InternalAnomaly):
    code = "non-integral-degree"


class NonFiniteLength(InternalAnomaly):
    code = "non-finite-length"


class AllTrialsDegenerate(InternalAnomaly):
    code = "all-trials-degenerate"
