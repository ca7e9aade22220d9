"""A modular interactive-fiction agent, a mock game engine and an evaluation harness."""

__version__ = "0.1.0"
