"""Procedural generation of paired source/target shape-scene datasets.

Scenes are stacked horizontal stuff bands with thing shapes scattered on
top. Both domains draw scenes from the same distribution; only the
rendering style (palette rotation, texture, blur) differs between them.
Labels are exact renders of the scene geometry.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from PIL import Image, ImageDraw
from scipy.ndimage import gaussian_filter

from ..errors import ConfigurationError
from .types import IGNORE, SOURCE, TARGET, THING, ClassDef, DatasetSpec, SegSample, StyleParams

# Base palette cycled per class id; target styles rotate hues on top of it.
_BASE_PALETTE = np.array(
    [
        (0.38, 0.29, 0.18),  # earthy brown
        (0.52, 0.66, 0.33),  # green
        (0.55, 0.71, 0.92),  # light blue
        (0.86, 0.24, 0.20),  # red
        (0.95, 0.80, 0.25),  # yellow
        (0.28, 0.34, 0.86),  # blue
        (0.90, 0.42, 0.74),  # pink
        (0.22, 0.80, 0.74),  # teal
        (0.60, 0.30, 0.75),  # purple
        (0.95, 0.58, 0.20),  # orange
        (0.45, 0.45, 0.45),  # grey
        (0.75, 0.90, 0.55),  # pale green
    ],
    dtype=np.float64,
)

_SPLIT_CODES = {"source": 0, "target": 1, "val": 2, "proxy": 3}


def class_color(class_id: int) -> np.ndarray:
    return _BASE_PALETTE[class_id % len(_BASE_PALETTE)]


def rotate_hue(rgb: np.ndarray, degrees: float) -> np.ndarray:
    """Rotate RGB colors about the grey axis by the given angle."""
    theta = math.radians(degrees)
    c, s = math.cos(theta), math.sin(theta)
    one_third = 1.0 / 3.0
    sq = math.sqrt(1.0 / 3.0)
    m = np.full((3, 3), one_third * (1.0 - c), dtype=np.float64)
    m += c * np.eye(3)
    m += s * sq * np.array([[0, -1, 1], [1, 0, -1], [-1, 1, 0]], dtype=np.float64)
    out = rgb @ m.T
    return np.clip(out, 0.0, 1.0)


def sample_rng(seed: int, split: str, index: int) -> np.random.Generator:
    """Stable per-sample RNG; generation is order-independent across samples."""
    if split not in _SPLIT_CODES:
        raise ConfigurationError(f"unknown split {split!r}")
    return np.random.default_rng(
        np.random.SeedSequence([int(seed), _SPLIT_CODES[split], int(index)])
    )


@dataclass
class _Instance:
    class_def: ClassDef
    cx: float
    cy: float
    radius: float
    angle: float
    shading: float


def _draw_shape(draw: ImageDraw.ImageDraw, inst: _Instance) -> None:
    cid = inst.class_def.class_id
    cx, cy, r, ang = inst.cx, inst.cy, inst.radius, inst.angle
    shape = inst.class_def.shape
    if shape == "disk":
        draw.ellipse([cx - r, cy - r, cx + r, cy + r], fill=cid)
    elif shape == "square":
        pts = []
        for k in range(4):
            a = ang + math.pi / 4 + k * math.pi / 2
            pts.append((cx + r * math.cos(a), cy + r * math.sin(a)))
        draw.polygon(pts, fill=cid)
    elif shape == "triangle":
        pts = []
        for k in range(3):
            a = ang - math.pi / 2 + k * 2 * math.pi / 3
            pts.append((cx + r * math.cos(a), cy + r * math.sin(a)))
        draw.polygon(pts, fill=cid)
    elif shape == "star":
        pts = []
        for k in range(10):
            rr = r if k % 2 == 0 else 0.45 * r
            a = ang - math.pi / 2 + k * math.pi / 5
            pts.append((cx + rr * math.cos(a), cy + rr * math.sin(a)))
        draw.polygon(pts, fill=cid)
    elif shape == "cross":
        w = 0.38 * r
        draw.rectangle([cx - r, cy - w, cx + r, cy + w], fill=cid)
        draw.rectangle([cx - w, cy - r, cx + w, cy + r], fill=cid)
    else:
        raise ConfigurationError(f"cannot draw shape {shape!r}")


def _band_label(spec: DatasetSpec, rng: np.random.Generator) -> np.ndarray:
    """Stack the stuff classes as horizontal bands with wavy boundaries."""
    h, w = spec.image_size
    stuff = [c for c in spec.classes if c.kind != THING]
    label = np.full((h, w), stuff[-1].class_id, dtype=np.uint8)
    n = len(stuff)
    # Random interior boundaries, each at least 4 rows apart.
    cuts = np.sort(rng.uniform(0.15, 0.85, size=n - 1)) * h
    cuts = np.maximum.accumulate(cuts + np.arange(n - 1) * 1e-3)
    cols = np.arange(w)
    rows = np.arange(h)[:, None]
    # Bands are listed bottom-up: first stuff class fills the lowest band.
    prev = np.full(w, h, dtype=np.float64)
    for band_idx, cls in enumerate(stuff[:-1]):
        amp = rng.uniform(0.0, 0.06) * h
        freq = rng.integers(1, 3)
        phase = rng.uniform(0.0, 2 * math.pi)
        boundary = h - cuts[band_idx] + amp * np.sin(2 * math.pi * freq * cols / w + phase)
        boundary = np.clip(boundary, 2.0, h - 2.0)
        boundary = np.minimum(boundary, prev - 2.0)
        mask = (rows >= boundary[None, :]) & (rows < prev[None, :])
        label[mask] = cls.class_id
        prev = boundary
    return label


def _scene_instances(spec: DatasetSpec, rng: np.random.Generator,
                     rate_floor: float = 0.0) -> list[_Instance]:
    h, w = spec.image_size
    scale = min(h, w)
    instances = []
    for cls in spec.classes:
        if cls.kind != THING:
            continue
        rate = max(cls.rate, rate_floor)
        if rng.random() >= rate:
            continue
        count = 1 if cls.rate < 0.1 else int(rng.integers(1, 3))
        for _ in range(count):
            radius = rng.uniform(0.08, 0.15) * scale
            instances.append(
                _Instance(
                    class_def=cls,
                    cx=rng.uniform(radius, w - radius),
                    cy=rng.uniform(radius, h - radius),
                    radius=radius,
                    angle=rng.uniform(0.0, 2 * math.pi),
                    shading=rng.uniform(0.88, 1.12),
                )
            )
    # Random paint order so occlusion does not favor any class.
    rng.shuffle(instances)
    return instances


def _render_label(spec: DatasetSpec, rng: np.random.Generator,
                  rate_floor: float = 0.0) -> tuple[np.ndarray, dict[int, float]]:
    label = _band_label(spec, rng)
    instances = _scene_instances(spec, rng, rate_floor)
    img = Image.fromarray(label, mode="L")
    draw = ImageDraw.Draw(img)
    for inst in instances:
        _draw_shape(draw, inst)
    shading = {i.class_def.class_id: i.shading for i in instances}
    return np.asarray(img, dtype=np.uint8), shading


def _render_image(label: np.ndarray, shading: dict[int, float],
                  style: StyleParams, rng: np.random.Generator) -> np.ndarray:
    h, w = label.shape
    palette = rotate_hue(_BASE_PALETTE[: int(label.max()) + 1], style.hue_shift_deg)
    img = palette[label]
    for cid, factor in shading.items():
        img[label == cid] *= factor
    # Vertical illumination gradient.
    grad = np.linspace(-0.04, 0.04, h)[:, None, None]
    img = img + grad
    if style.texture_amplitude > 0.0:
        low = rng.normal(0.0, 1.0, size=(8, 8))
        tex = np.kron(low, np.ones((math.ceil(h / 8), math.ceil(w / 8))))[:h, :w]
        tex = gaussian_filter(tex, sigma=2.0)
        img = img + style.texture_amplitude * tex[:, :, None]
    if style.noise_std > 0.0:
        img = img + rng.normal(0.0, style.noise_std, size=img.shape)
    if style.blur_sigma > 0.0:
        img = gaussian_filter(img, sigma=(style.blur_sigma, style.blur_sigma, 0.0))
    return np.clip(img, 0.0, 1.0).astype(np.float32)


def render_sample(spec: DatasetSpec, split: str, index: int) -> SegSample:
    """Render one sample deterministically from (spec.seed, split, index)."""
    style = spec.source_style if split == "source" else spec.target_style
    domain = SOURCE if split == "source" else TARGET
    rate_floor = spec.val_min_rate if split == "val" else 0.0
    rng = sample_rng(spec.seed, split, index)
    required = {c.class_id for c in spec.classes if c.rate >= 1.0}
    for _ in range(8):
        label, shading = _render_label(spec, rng, rate_floor)
        present = set(np.unique(label).tolist())
        if required <= present:
            break
    else:
        raise ConfigurationError(
            "could not render all rate-1.0 classes; shapes fully occlude a band"
        )
    image = _render_image(label, shading, style, rng)
    return SegSample(image=image, label=label, domain=domain, id=f"{split}_{index:05d}")


def generate_split(spec: DatasetSpec, split: str, count: int) -> list[SegSample]:
    return [render_sample(spec, split, i) for i in range(count)]


def generate_dataset(spec: DatasetSpec) -> list[SegSample]:
    """The training corpus: num_source source samples then num_target target samples."""
    spec.validate()
    out = generate_split(spec, "source", spec.num_source)
    out += generate_split(spec, "target", spec.num_target)
    return out


@dataclass
class DatasetBundle:
    spec: DatasetSpec
    source: list[SegSample]
    target: list[SegSample]
    val: list[SegSample]


def build_bundle(spec: DatasetSpec) -> DatasetBundle:
    spec.validate()
    return DatasetBundle(
        spec=spec,
        source=generate_split(spec, "source", spec.num_source),
        target=generate_split(spec, "target", spec.num_target),
        val=generate_split(spec, "val", spec.num_val),
    )


def render_proxy_sample(spec: DatasetSpec, index: int) -> tuple[np.ndarray, int]:
    """One single-object classification sample for reference pretraining.

    A lone thing shape on a band background under a uniformly random hue
    rotation, so the pretrained features discriminate shape rather than
    any one domain's palette.
    """
    rng = sample_rng(spec.seed, "proxy", index)
    h, w = spec.image_size
    scale = min(h, w)
    things = [c for c in spec.classes if c.kind == THING]
    cls = things[int(rng.integers(len(things)))]
    radius = rng.uniform(0.14, 0.26) * scale
    inst = _Instance(
        class_def=cls,
        cx=rng.uniform(radius, w - radius),
        cy=rng.uniform(radius, h - radius),
        radius=radius,
        angle=rng.uniform(0.0, 2 * math.pi),
        shading=rng.uniform(0.88, 1.12),
    )
    label = _band_label(spec, rng)
    img = Image.fromarray(label, mode="L")
    _draw_shape(ImageDraw.Draw(img), inst)
    label = np.asarray(img, dtype=np.uint8)
    style = StyleParams(
        hue_shift_deg=rng.uniform(0.0, 360.0),
        texture_amplitude=rng.uniform(0.0, 0.12),
        blur_sigma=rng.uniform(0.0, 0.9),
        noise_std=rng.uniform(0.0, 0.03),
    )
    image = _render_image(label, {cls.class_id: inst.shading}, style, rng)
    return image, things.index(cls)


def default_classes() -> tuple[ClassDef, ...]:
    """The long-tail benchmark layout: 3 stuff bands, 3 common and 2 rare things."""
    return (
        ClassDef(0, "ground", "stuff", "band", 1.0),
        ClassDef(1, "field", "stuff", "band", 1.0),
        ClassDef(2, "sky", "stuff", "band", 1.0),
        ClassDef(3, "square", "thing", "square", 0.70),
        ClassDef(4, "disk", "thing", "disk", 0.60),
        ClassDef(5, "triangle", "thing", "triangle", 0.45),
        ClassDef(6, "star", "thing", "star", 0.035),
        ClassDef(7, "cross", "thing", "cross", 0.02),
    )


def default_spec(**overrides) -> DatasetSpec:
    return DatasetSpec(classes=default_classes(), **overrides)
