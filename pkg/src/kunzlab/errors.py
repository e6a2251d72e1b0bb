"""Exception types shared across the package."""


class KunzlabError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(KunzlabError, ValueError):
    """An argument is outside the domain an operation is defined on."""


class NotCofinite(DomainError):
    """The generators have gcd != 1, so the generated monoid misses
    infinitely many integers and is not a numerical semigroup."""


class NotKunz(DomainError):
    """A word that was required to satisfy the Kunz conditions does not."""


class LetterOutOfAlphabet(DomainError):
    """A word contains a letter outside the alphabet of the machine or
    automaton it was fed to."""


class InvalidDecomposition(DomainError):
    """Cut points do not describe a five-way split of the given word."""


class ResourceBound(KunzlabError):
    """An enumeration or search would exceed its configured ceiling.

    Raised up front, before any partial output is produced: results are
    never silently truncated.
    """


class StepBudgetExceeded(KunzlabError):
    """A machine run did not halt within the step budget.  The machines
    shipped here always halt, so this signals a machine or simulator bug
    (or a budget set far too low)."""


class MachineDefinitionError(KunzlabError):
    """A run reached a (state, cell) pair with no transition.  Always a
    bug in the machine program, never a property of the input."""


class NoRefutation(KunzlabError):
    """Some decomposition admitted by the pumping conditions survived all
    attempted pumping counts.

    Carries the full report; either the pumping count ceiling was too
    small or the word genuinely pumps, and both cases deserve eyes.
    """

    def __init__(self, report):
        self.report = report
        survivors = len(report.unrefuted)
        super().__init__(
            f"{survivors} decomposition(s) of {report.word} survived "
            f"k <= {report.k_max}"
        )
