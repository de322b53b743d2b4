# acx/acx/animation/__init__.py
"""Optional manim rendering of completion traces.

Install the ``animate`` extra to use it; importing this package does not
import manim, the first attribute access does.
"""

from __future__ import annotations

__all__ = ["CompletionTraceScene", "TraceNarrationManager", "TranscriptManager", "scene_for", "render_trace"]


def __getattr__(name):
    if name in __all__:
        from . import trace_scene

        return getattr(trace_scene, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
