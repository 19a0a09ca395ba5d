"""Executable Weihrauch reductions between problems about infinite graphs, trees and number functions."""

__version__ = "0.1.0"
