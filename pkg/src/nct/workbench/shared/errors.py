from __future__ import annotations


class WorkbenchError(Exception):
    """Base class of every domain error raised by the workbench"""


class NotAdmissibleError(WorkbenchError):
    """The relations do not generate an admissible ideal under the given bound"""


class RelationViolatedError(WorkbenchError):
    """A representation does not satisfy the relations of its algebra"""


class DecompositionInconclusiveError(WorkbenchError):
    """Indecomposability could neither be certified nor refuted within budget"""


class IsoInconclusiveError(WorkbenchError):
    """No isomorphism was found, but the invariants do not rule one out"""


class MinimalityInconclusiveError(WorkbenchError):
    """The space of endomorphisms to verify minimality is above the cap"""


class ApproxNotSurjectiveError(WorkbenchError):
    """A right approximation needed to be surjective and was not"""

    def __init__(self, message: str, module_name: str | None = None):
        super().__init__(message)
        self.module_name = module_name


class NKernelEscapesMError(WorkbenchError):
    """The last kernel of an n-kernel construction is not in the subcategory"""


class NCokernelEscapesMError(WorkbenchError):
    """The last cokernel of an n-cokernel construction is not in the subcategory"""


class RepresentativeEscapesMError(WorkbenchError):
    """A Yoneda representative could not be built with terms in the subcategory"""


class EnumerationTooLargeError(WorkbenchError):
    """An exhaustive enumeration would exceed the enumeration cap"""

    def __init__(self, size: int, cap: int, what: str = "enumeration"):
        super().__init__(f"{what} of size {size} exceeds the enumeration cap {cap}")
        self.size = size
        self.cap = cap


class UniverseTooLargeError(WorkbenchError):
    """The oracle subset search was asked to run over too many modules"""


class NotCoveringError(WorkbenchError):
    """A subcategory has no surjective approximation of some module"""

    def __init__(self, message: str, witness: str | None = None):
        super().__init__(message)
        self.witness = witness


class InputError(WorkbenchError):
    """A description file or command line argument could not be loaded

    Attributes:
      source: str: The file name or argument the error came from
      location: str: A JSON path or token pointing at the offending value
    """

    def __init__(self, message: str, source: str = "<input>", location: str = ""):
        where = f"{source}:{location}" if location else source
        super().__init__(f"{where}: {message}")
        self.source = source
        self.location = location
