"""
Error hierarchy shared by every engine component.

``default_code`` mirrors the attribute DRF exceptions carry so the API
exception handler and the CLI can report a stable machine-readable code.
"""


class EngineError(Exception):
    default_code = 'engine-error'
    default_message = 'Computation failed'
    is_usage_error = False

    def __init__(self, message=None, **details):
        self.message = message or self.default_message
        self.details = details
        super().__init__(self.message)

    def to_dict(self):
        payload = {'error': self.default_code, 'message': self.message}
        payload.update({key: value for key, value in self.details.items() if value is not None})
        return payload


class ExpressionSyntaxError(EngineError):
    default_code = 'syntax-error'
    default_message = 'Malformed expression'
    is_usage_error = True

    def __init__(self, message=None, position=None, **details):
        super().__init__(message, position=position, **details)
        self.position = position


class ModuleSpecError(EngineError):
    default_code = 'bad-module-spec'
    default_message = 'Malformed module specification'
    is_usage_error = True


class WindowTooSmall(EngineError):
    default_code = 'window-too-small'
    default_message = 'The weight window is too narrow for this computation'


class InvalidModule(EngineError):
    default_code = 'invalid-module'
    default_message = 'Window data does not describe a module'

    def __init__(self, message=None, violations=None, **details):
        violations = list(violations or [])
        super().__init__(message, violations=violations or None, **details)
        self.violations = violations


class InfeasibleSystem(EngineError):
    default_code = 'infeasible-system'
    default_message = 'No equivariant solution exists for the given data'


class NotNilpotent(EngineError):
    default_code = 'not-nilpotent'
    default_message = 'Matrix is not nilpotent'


class MismatchedModules(EngineError):
    default_code = 'mismatched-modules'
    default_message = 'Modules live on different weight classes or windows'


class TruncationError(EngineError):
    default_code = 'truncation-too-small'
    default_message = 'Truncation size leaves no exact columns'


class TruncationCapExceeded(TruncationError):
    default_code = 'truncation-cap'
    default_message = 'Truncation size exceeds INTDIFF_MAX_DEGREE'


class UsageError(EngineError):
    default_code = 'usage'
    default_message = 'Invalid command line'
    is_usage_error = True
