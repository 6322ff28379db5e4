"""Executable Hilbert-function geometry.

Macaulay growth bounds, Gotzmann persistence, monomial and lex-segment ideals,
exact linear algebra over large prime fields for ideals of forms and of
points, and a rule engine that reads base-locus structure off a flat in the
h-vector of a zero-dimensional scheme.
"""

from hilbgeom.errors import DomainError, GenericityError, HilbgeomError
from hilbgeom.seqcore import HilbertSeq

__all__ = ["DomainError", "GenericityError", "HilbgeomError", "HilbertSeq"]
__version__ = "0.1.0"
