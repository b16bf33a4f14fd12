"""
Tools package for nctorus.

The command-line entry point and the JSON export of structure constants.
"""

from nctorus.tools.export import export_constants, load_constants

__all__ = ["export_constants", "load_constants"]
