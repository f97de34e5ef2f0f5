"""Deterministic geometry for the two feature-extraction front ends.

Full-body windows: 64 frames with stride 8 over 224x224 input after gray
padding (20% left/right, 7.5% top/bottom). Mouth features: one 768-dim
vector per frame over 96x96 crops. No pixels are touched here; the plans
are emitted as data for downstream extractors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


def _round_half_away(x: float) -> int:
    return int(math.floor(x + 0.5)) if x >= 0 else -int(math.floor(-x + 0.5))


@dataclass(frozen=True)
class PadSpec:
    left_frac: float = 0.20
    right_frac: float = 0.20
    top_frac: float = 0.075
    bottom_frac: float = 0.075
    target_w: int = 224
    target_h: int = 224
    fill: str = "GRAY"

    def __post_init__(self) -> None:
        for frac in (self.left_frac, self.right_frac, self.top_frac,
                     self.bottom_frac):
            if frac < 0:
                raise ValueError("padding fractions must be >= 0")
        if self.target_w <= 0 or self.target_h <= 0:
            raise ValueError("target dimensions must be positive")


@dataclass(frozen=True)
class WindowSpec:
    window: int = 64
    stride: int = 8

    def __post_init__(self) -> None:
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if not 1 <= self.stride <= self.window:
            raise ValueError("stride must be in [1, window]")


FULL_BODY_FEATURE_DIM = 1024  # embedding width per 64-frame window


@dataclass(frozen=True)
class WindowPlan:
    padded_w: int
    padded_h: int
    scale_x: float
    scale_y: float
    window_starts: tuple[int, ...]
    tail_padding: int
    feature_dim: int = FULL_BODY_FEATURE_DIM

    def to_dict(self) -> dict:
        return {
            "padded_w": self.padded_w,
            "padded_h": self.padded_h,
            "scale_x": self.scale_x,
            "scale_y": self.scale_y,
            "window_starts": list(self.window_starts),
            "tail_padding": self.tail_padding,
            "feature_dim": self.feature_dim,
        }


@dataclass(frozen=True)
class MouthPlan:
    sequence_len: int
    crop_w: int = 96
    crop_h: int = 96
    feature_dim: int = 768

    def to_dict(self) -> dict:
        return {
            "sequence_len": self.sequence_len,
            "crop_w": self.crop_w,
            "crop_h": self.crop_h,
            "feature_dim": self.feature_dim,
        }


def plan_padding(w: int, h: int,
                 spec: PadSpec = PadSpec()) -> tuple[int, int, float, float]:
    """Padded dimensions and the scale mapping them to the target box."""
    if w <= 0 or h <= 0:
        raise ValueError("frame dimensions must be positive")
    padded_w = _round_half_away(w * (1.0 + spec.left_frac + spec.right_frac))
    padded_h = _round_half_away(h * (1.0 + spec.top_frac + spec.bottom_frac))
    return padded_w, padded_h, spec.target_w / padded_w, spec.target_h / padded_h


def plan_windows(frame_count: int, spec: WindowSpec = WindowSpec(),
                 width: int | None = None, height: int | None = None,
                 pad: PadSpec = PadSpec()) -> WindowPlan:
    """Window start indices over a frame count.

    Clips shorter than one window get a single window with last-frame
    repetition padding; empty clips get an empty plan. When width/height
    are given, padding geometry is filled in; otherwise the plan carries
    the target box with unit scale.
    """
    if frame_count < 0:
        raise ValueError("frame_count must be >= 0")
    if width is not None and height is not None:
        padded_w, padded_h, scale_x, scale_y = plan_padding(width, height, pad)
    else:
        padded_w, padded_h, scale_x, scale_y = pad.target_w, pad.target_h, 1.0, 1.0
    if frame_count == 0:
        starts: tuple[int, ...] = ()
        tail = 0
    elif frame_count < spec.window:
        starts = (0,)
        tail = spec.window - frame_count
    else:
        starts = tuple(range(0, frame_count - spec.window + 1, spec.stride))
        tail = 0
    return WindowPlan(padded_w, padded_h, scale_x, scale_y, starts, tail)


def plan_mouth(frame_count: int) -> MouthPlan:
    if frame_count < 0:
        raise ValueError("frame_count must be >= 0")
    return MouthPlan(sequence_len=frame_count)
