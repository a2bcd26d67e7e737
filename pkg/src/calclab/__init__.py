"""calclab: numerical analysis and mathematical physics toolkit."""

__version__ = "0.1.0"
