"""Command-line driver and the instance file format."""

from .files import (FileFormatError, dumps, instance_from_document, instance_to_document, loads,
                    read_instance, write_instance)
from .main import main
