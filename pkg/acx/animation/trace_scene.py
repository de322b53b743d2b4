# acx/acx/animation/trace_scene.py
"""
CompletionTraceScene: Completion Traces as Manim Scenes
=======================================================

Architecture Overview:
---------------------
The scene replays a recorded completion trace row by row:

- an upper narration line names the inference of the current row
  (``Ori 3``, ``Col 4 and 5``...),
- the rows themselves scroll in a table in the middle of the frame, at most
  ``visible_rows`` at a time,
- when the trace is done, the final rule system is shown with every
  persistent rule highlighted.

Key Design Principles:
- **Manager delegation pattern**: narration goes through
  :class:`TraceNarrationManager`, file output through
  :class:`TranscriptManager`.
- **Primer pattern**: the narration line is one mobject that is transformed
  into each new text, so it never has to be re-added to the scene.
- **Transcript output**: every row is also written as plain text next to the
  rendered video (``.txt``), for accessibility and review.

Usage:
------
    from acx.frontend import parse_problem, prove_problem
    from acx.animation import render_trace
    from acx.problems import load_problem_text

    report = prove_problem(parse_problem(load_problem_text("fig3")))
    render_trace(report, quality="low_quality")
"""

from __future__ import annotations

__all__ = ["CompletionTraceScene", "TraceNarrationManager", "TranscriptManager", "scene_for", "render_trace"]

from typing import TYPE_CHECKING, List, Optional, Type

from manim import (
    BLACK,
    DOWN,
    GREY_B,
    LEFT,
    UP,
    WHITE,
    YELLOW,
    FadeIn,
    FadeOut,
    Scene,
    SurroundingRectangle,
    Text,
    Transform,
    VGroup,
    tempconfig,
)

from ..engine.trace import TraceRow, write_lines
from ..logger_utils import logger

if TYPE_CHECKING:
    from ..frontend.prover import ProverReport


_NARRATION = {
    "Ori": "Orient",
    "Sim": "Simplify",
    "Tri": "Trivial",
    "Bot": "Bottom",
    "Com": "Compose",
    "Col": "Collapse",
    "Ded": "Deduce",
}


class TraceNarrationManager:
    """Upper narration line using the primer pattern (internal)."""

    def __init__(self, scene: Scene, font_size: int = 32) -> None:
        self.scene = scene
        self.font_size = font_size
        self.current = Text("0" * 40, color=BLACK, font_size=1).to_edge(UP)
        scene.add(self.current)

    def narrate(self, text: str, run_time: float = 0.5) -> None:
        target = Text(text, color=WHITE, font_size=self.font_size).to_edge(UP)
        self.scene.play(Transform(self.current, target), run_time=run_time)


class TranscriptManager:
    """Plain-text transcript written next to the rendered video (internal)."""

    def __init__(self, scene: Scene) -> None:
        self.scene = scene
        self.transcript_lines: list[str] = []

    def add_transcript(self, content: str) -> None:
        self.transcript_lines.append(content)

    def flush(self) -> bool:
        """Write the transcript as ``<movie>.txt``; False when nothing was written."""
        file_writer = getattr(self.scene.renderer, "file_writer", None)
        movie = getattr(file_writer, "movie_file_path", None)
        if movie is None:
            if self.transcript_lines:
                logger.warning("Cannot write transcript: renderer has no movie file path.")
            return False
        return write_lines(movie.with_suffix(".txt"), self.transcript_lines, "transcript")


class CompletionTraceScene(Scene):
    """Replays ``rows`` and ends on ``final_rules``; use :func:`scene_for` to bind them."""

    rows: List[TraceRow] = []
    final_rules: List[str] = []
    title: str = "completion"
    visible_rows: int = 8
    row_font_size: int = 22

    def setup(self) -> None:
        super().setup()
        self.narration = TraceNarrationManager(self)
        self.transcript = TranscriptManager(self)

    def tear_down(self) -> None:
        if self.transcript:
            self.transcript.flush()
        super().tear_down()

    def _row_text(self, row: TraceRow) -> Text:
        color = YELLOW if row.persistent else WHITE
        return Text(f"{row.step}  {row.item}    {row.justification}", font_size=self.row_font_size, color=color)

    def construct(self) -> None:
        self.narration.narrate(self.title)
        shown = VGroup()
        for row in self.rows:
            text = self._row_text(row)
            if shown.submobjects:
                text.next_to(shown.submobjects[-1], DOWN, aligned_edge=LEFT, buff=0.15)
            else:
                text.to_edge(LEFT).shift(UP * 2)
            self.narration.narrate(f"{_NARRATION[row.inference.value]}: {row.justification}", run_time=0.3)
            self.play(FadeIn(text), run_time=0.3)
            shown.add(text)
            self.transcript.add_transcript(f"{row.step} | {row.item} | {row.justification}")
            if len(shown.submobjects) > self.visible_rows:
                oldest = shown.submobjects[0]
                shown.remove(oldest)
                self.play(FadeOut(oldest), shown.animate.shift(UP * (oldest.height + 0.15)), run_time=0.3)

        self.play(FadeOut(shown), run_time=0.5)
        if not self.final_rules:
            self.narration.narrate("inconsistent hypotheses")
            self.transcript.add_transcript("The hypotheses are inconsistent.")
            self.wait(1)
            return

        self.narration.narrate(f"final system: {len(self.final_rules)} rules")
        rules = VGroup(*[Text(r, font_size=self.row_font_size) for r in self.final_rules])
        rules.arrange(DOWN, aligned_edge=LEFT, buff=0.2)
        frame = SurroundingRectangle(rules, color=GREY_B, buff=0.3)
        self.play(FadeIn(rules), FadeIn(frame))
        self.transcript.add_transcript("Final rules: " + "; ".join(self.final_rules))
        self.wait(2)


def scene_for(report: "ProverReport", title: Optional[str] = None) -> Type[CompletionTraceScene]:
    """A scene class bound to the trace and final rules of one prover run."""
    rows = list(report.verdict.result.trace)
    final = [str(r) for r in report.display_rules()]
    name = title or f"{report.verdict.label}"
    return type(
        "BoundCompletionTraceScene",
        (CompletionTraceScene,),
        {"rows": rows, "final_rules": final, "title": name},
    )


def render_trace(report: "ProverReport", quality: str = "low_quality", output_file: Optional[str] = None,
                 title: Optional[str] = None) -> None:
    """Render the trace of ``report`` with manim's renderer."""
    options = {"quality": quality}
    if output_file is not None:
        options["output_file"] = output_file
    scene_cls = scene_for(report, title)
    with tempconfig(options):
        scene_cls().render()
