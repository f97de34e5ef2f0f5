"""Tests for padding and window-plan geometry."""

import pytest

from slt_toolkit.frameplan import (
    MouthPlan,
    PadSpec,
    WindowSpec,
    plan_mouth,
    plan_padding,
    plan_windows,
)


def test_default_padding_arithmetic():
    padded_w, padded_h, scale_x, scale_y = plan_padding(1000, 1000)
    assert (padded_w, padded_h) == (1400, 1150)
    assert scale_x == pytest.approx(224 / 1400)
    assert scale_y == pytest.approx(224 / 1150)


def test_zero_fraction_padding_is_identity():
    spec = PadSpec(left_frac=0, right_frac=0, top_frac=0, bottom_frac=0)
    padded_w, padded_h, scale_x, scale_y = plan_padding(320, 240, spec)
    assert (padded_w, padded_h) == (320, 240)
    assert scale_x == pytest.approx(224 / 320)
    assert scale_y == pytest.approx(224 / 240)


def test_matching_target_gives_unit_scale():
    spec = PadSpec(left_frac=0, right_frac=0, top_frac=0, bottom_frac=0)
    assert plan_padding(224, 224, spec) == (224, 224, 1.0, 1.0)


def test_padding_rounds_half_away_from_zero():
    # 25 * 1.15 = 28.75 -> 29; 2 * 1.15 = 2.3 -> 2
    assert plan_padding(10, 25)[1] == 29
    assert plan_padding(10, 2)[1] == 2


def test_invalid_dimensions():
    with pytest.raises(ValueError):
        plan_padding(0, 100)
    with pytest.raises(ValueError):
        PadSpec(left_frac=-0.1)


def test_single_window():
    plan = plan_windows(64)
    assert plan.window_starts == (0,)
    assert plan.tail_padding == 0


def test_three_windows_at_80_frames():
    plan = plan_windows(80)
    assert plan.window_starts == (0, 8, 16)
    assert plan.tail_padding == 0


def test_short_clip_padded():
    plan = plan_windows(40)
    assert plan.window_starts == (0,)
    assert plan.tail_padding == 24


def test_empty_clip():
    plan = plan_windows(0)
    assert plan.window_starts == ()
    assert plan.tail_padding == 0


def test_window_spec_validation():
    with pytest.raises(ValueError):
        WindowSpec(window=0)
    with pytest.raises(ValueError):
        WindowSpec(window=8, stride=9)
    with pytest.raises(ValueError):
        WindowSpec(stride=0)
    with pytest.raises(ValueError):
        plan_windows(-1)


def test_starts_match_exhaustive_enumeration():
    for stride in range(1, 65):
        spec = WindowSpec(window=64, stride=stride)
        for frames in range(0, 501):
            plan = plan_windows(frames, spec)
            if frames >= 64:
                expected = [s for s in range(0, frames, stride)
                            if s + 64 <= frames]
                assert list(plan.window_starts) == expected, (frames, stride)
                assert len(plan.window_starts) == (frames - 64) // stride + 1
                assert plan.tail_padding == 0
            elif frames > 0:
                assert plan.window_starts == (0,)
                assert plan.tail_padding == 64 - frames
            else:
                assert plan.window_starts == ()
            # every window fits within the (possibly padded) clip
            for start in plan.window_starts:
                assert start + 64 <= frames + plan.tail_padding


def test_window_count_monotone_in_frame_count():
    previous = -1
    for frames in range(0, 300):
        count = len(plan_windows(frames).window_starts)
        assert count >= previous
        previous = count


def test_plan_carries_geometry_when_dims_given():
    plan = plan_windows(80, width=1000, height=1000)
    assert (plan.padded_w, plan.padded_h) == (1400, 1150)
    assert plan.feature_dim == 1024


def test_mouth_plan():
    plan = plan_mouth(100)
    assert plan == MouthPlan(sequence_len=100)
    assert (plan.crop_w, plan.crop_h, plan.feature_dim) == (96, 96, 768)
    assert plan_mouth(0).sequence_len == 0
    assert plan_mouth(1).sequence_len == 1
    with pytest.raises(ValueError):
        plan_mouth(-5)
