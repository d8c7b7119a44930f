class MscaError(Exception):
    pass


class InvalidAction(MscaError):
    pass


class ValidationError(MscaError):
    def __init__(self, violations, message=None):
        self.violations = list(violations)
        super().__init__(message or "; ".join(self.violations) or "invalid automaton")


class ParseError(MscaError):
    def __init__(self, message, path="$"):
        self.path = path
        super().__init__(f"{path}: {message}")


class MixedFlavor(MscaError):
    pass


class EmptyOperandList(MscaError):
    pass


class RankMismatch(MscaError):
    pass


class FlavorMismatch(MscaError):
    pass


class InvalidInput(MscaError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid synthesis input")


class NonMonotonePredicate(MscaError):
    pass


class TooLarge(MscaError):
    pass


class BranchingConditionBroken(MscaError):
    def __init__(self, violations):
        self.violations = sorted(violations)
        super().__init__(f"choreography breaks the branching condition on {len(self.violations)} matches")
