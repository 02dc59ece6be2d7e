"""Workbench for finite universal algebras: endomorphism representations,
medial commutativity checks, and dilatation monoid construction."""

from .core import Algebra, Carrier, Operation, UnaryMap, load_algebra, save_algebra
from .representation import Frame, build_representation, enumerate_endomorphisms

__all__ = [
    "Algebra",
    "Carrier",
    "Frame",
    "Operation",
    "UnaryMap",
    "build_representation",
    "enumerate_endomorphisms",
    "load_algebra",
    "save_algebra",
]
