"""
Export of structure-constant tables to JSON.

Floats are written with ``repr`` precision, so a table read back with
:func:`load_constants` is identical to the one written.
"""

import json
import logging
import os

from nctorus.config import RunConfig
from nctorus.sl2_arith import SL2Mat, TorusParams
from nctorus.theta_engine import StructureConstantsTable, structure_constants

logger = logging.getLogger(__name__)

__all__ = ["export_constants", "load_constants"]


def export_constants(
    g1: SL2Mat,
    g2: SL2Mat,
    config: RunConfig,
    path: str | os.PathLike,
    z1: complex = 0j,
    z2: complex = 0j,
) -> StructureConstantsTable:
    """
    Compute ``c(g1; g2)`` at ``(config.theta, config.tau)`` and write it to ``path``.

    Parameters
    ----------
    g1, g2 : SL2Mat
        Labels; ``structure_constants`` preconditions apply.
    config : RunConfig
        Supplies ``theta``, ``tau`` and ``tol``.
    path : str or os.PathLike
        Output file.
    z1, z2 : complex, optional
        Twists.

    Returns
    -------
    StructureConstantsTable
        The table that was written.

    Raises
    ------
    DomainError
        If the labels violate the degree or rank preconditions.
    OSError
        If the file cannot be written.

    Examples
    --------
    >>> g = SL2Mat(1, 0, 1, 1)
    >>> table = export_constants(g, g, RunConfig(theta=0.0), "c.json")
    >>> len(table.to_dict()["entries"])
    2
    """
    config.validate()
    table = structure_constants(g1, g2, TorusParams(config.theta, config.tau), z1, z2, config.tol)
    with open(path, "w", encoding="utf-8") as output:
        json.dump(table.to_dict(), output, indent=2)
    logger.info(f"Wrote {table.values.size} constants of ({g1}; {g2}) to {path}")
    return table


def load_constants(path: str | os.PathLike) -> StructureConstantsTable:
    """Read a table written by :func:`export_constants`."""
    with open(path, encoding="utf-8") as source:
        data = json.load(source)
    return StructureConstantsTable.from_dict(data)
