"""This module contains the shared reference instances. The constructors return the
exact objects; the ``data_path`` function returns the bundled instance files that the
command-line interface can read."""

from .fixtures import data_path, fix_a, fix_b, fix_b_witness, fix_c, fix_d

__all__ = ("data_path", "fix_a", "fix_b", "fix_b_witness", "fix_c", "fix_d")
