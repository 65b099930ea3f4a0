"""Instance and report files."""

from .instance import (
    Instance,
    InstanceFormatError,
    parse_instance,
    read_instance,
    write_instance,
)
from .report import dumps_record, read_records, report_record, write_records

__all__ = (
    "Instance",
    "InstanceFormatError",
    "parse_instance",
    "read_instance",
    "write_instance",
    "dumps_record",
    "read_records",
    "report_record",
    "write_records",
)
