"""Exception hierarchy shared by every module."""


class SemigroupError(ValueError):
    """Base class for all errors raised by semitree."""


class GcdNotOne(SemigroupError):
    def __init__(self, gens):
        self.gens = tuple(gens)
        super().__init__(f"generators {list(self.gens)} are not coprime")


class NotClosed(SemigroupError):
    def __init__(self, a, b):
        self.a, self.b = a, b
        super().__init__(f"complement is not closed: {a} + {b} = {a + b} is a gap")


class NotMember(SemigroupError):
    pass


class IndexBelowConductor(SemigroupError):
    pass


class ParseError(SemigroupError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class RootHasNoParent(SemigroupError):
    pass


class NotEffective(SemigroupError):
    pass


class OrdinaryInput(SemigroupError):
    pass


class NotOrdinary(SemigroupError):
    pass


class BadGenus(SemigroupError):
    pass


class BadParameter(SemigroupError):
    pass


class TrivialSemigroup(SemigroupError):
    pass


class NotApplicable(SemigroupError):
    pass


class BadSeed(SemigroupError):
    pass


class InsufficientRange(SemigroupError):
    pass
