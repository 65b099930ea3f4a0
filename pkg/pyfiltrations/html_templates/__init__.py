"""HTML templates for the notebook representations."""

from ._templates import repr_templates_env  # noqa: F401
