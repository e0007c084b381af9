"""
SKTeleport exporters: text and structured output for reports.

Copyright (C) 2025 smilinTux
Licensed under AGPL-3.0.
"""

from .json_exporter import render_json, to_structured
from .text_exporter import render_text

__all__ = ["render_json", "render_text", "to_structured"]
