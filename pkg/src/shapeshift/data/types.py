"""Core data types for the procedural shape-scene benchmark."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigurationError, ShapeError

# Label value excluded from every loss and metric.
IGNORE = 255

SOURCE = "source"
TARGET = "target"

STUFF = "stuff"
THING = "thing"

SHAPE_FAMILIES = ("band", "disk", "square", "triangle", "star", "cross")


@dataclass(frozen=True)
class SegSample:
    """One image with a dense label map. Immutable after creation."""

    image: np.ndarray  # H x W x 3 float32 in [0, 1]
    label: np.ndarray  # H x W uint8, class ids or IGNORE
    domain: str        # SOURCE or TARGET
    id: str

    def validate(self, num_classes: int) -> None:
        if self.image.shape[:2] != self.label.shape:
            raise ShapeError(
                f"sample {self.id}: image {self.image.shape[:2]} vs label {self.label.shape}"
            )
        if not np.isfinite(self.image).all():
            raise ConfigurationError(f"sample {self.id}: non-finite image values")
        if self.image.min() < 0.0 or self.image.max() > 1.0:
            raise ConfigurationError(f"sample {self.id}: image values outside [0, 1]")
        lab = self.label[self.label != IGNORE]
        if lab.size and lab.max() >= num_classes:
            raise ConfigurationError(f"sample {self.id}: label id >= {num_classes}")


@dataclass(frozen=True)
class ClassDef:
    """One semantic class: what it looks like and how often it occurs."""

    class_id: int
    name: str
    kind: str          # STUFF or THING
    shape: str         # one of SHAPE_FAMILIES ("band" for stuff)
    rate: float        # probability that a sample contains >= 1 pixel of the class

    def validate(self) -> None:
        if self.kind not in (STUFF, THING):
            raise ConfigurationError(f"class {self.name}: kind must be stuff/thing")
        if self.shape not in SHAPE_FAMILIES:
            raise ConfigurationError(f"class {self.name}: unknown shape {self.shape!r}")
        if self.kind == STUFF and self.shape != "band":
            raise ConfigurationError(f"class {self.name}: stuff classes render as bands")
        if self.kind == THING and self.shape == "band":
            raise ConfigurationError(f"class {self.name}: thing classes need a shape")
        if not 0.0 < self.rate <= 1.0:
            raise ConfigurationError(f"class {self.name}: rate must be in (0, 1]")


@dataclass(frozen=True)
class StyleParams:
    """Rendering style of one domain: palette rotation, texture, blur."""

    hue_shift_deg: float = 0.0
    texture_amplitude: float = 0.03
    blur_sigma: float = 0.0
    noise_std: float = 0.01

    def as_tuple(self):
        return (self.hue_shift_deg, self.texture_amplitude, self.blur_sigma, self.noise_std)


@dataclass(frozen=True)
class DatasetSpec:
    """Full recipe for one paired source/target dataset."""

    classes: tuple[ClassDef, ...]
    image_size: tuple[int, int] = (64, 64)
    num_source: int = 800
    num_target: int = 800
    num_val: int = 160
    source_style: StyleParams = field(default_factory=StyleParams)
    target_style: StyleParams = field(
        default_factory=lambda: StyleParams(60.0, 0.10, 0.7, 0.02)
    )
    # Thing occurrence rates are raised to at least this value in the val
    # split so per-class IoU is measurable for rare classes.
    val_min_rate: float = 0.25
    seed: int = 0

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def thing_ids(self) -> list[int]:
        return [c.class_id for c in self.classes if c.kind == THING]

    def stuff_ids(self) -> list[int]:
        return [c.class_id for c in self.classes if c.kind == STUFF]

    def validate(self) -> None:
        ids = [c.class_id for c in self.classes]
        if ids != list(range(len(ids))):
            raise ConfigurationError("class ids must be 0..C-1 in order")
        if len(ids) - len(self.thing_ids()) < 2 or len(self.thing_ids()) < 3:
            raise ConfigurationError("need at least 2 stuff and 3 thing classes")
        for c in self.classes:
            c.validate()
        h, w = self.image_size
        if h < 16 or w < 16:
            raise ConfigurationError("image size too small to render bands and shapes")
        if min(self.num_source, self.num_target) < 1:
            raise ConfigurationError("num_source and num_target must be >= 1")
        if self.source_style.as_tuple() == self.target_style.as_tuple():
            raise ConfigurationError("source and target styles must differ")


@dataclass(frozen=True)
class AugmentationParams:
    """Photometric augmentation magnitudes. Labels are never touched."""

    jitter_strength: float = 0.25
    blur_prob: float = 0.5
    blur_sigma_range: tuple[float, float] = (0.15, 1.15)
    crop_size: tuple[int, int] = (64, 64)

    def validate(self, image_size: tuple[int, int] | None = None) -> None:
        if not 0.0 <= self.blur_prob <= 1.0:
            raise ConfigurationError("blur_prob must be in [0, 1]")
        if self.jitter_strength < 0.0:
            raise ConfigurationError("jitter_strength must be >= 0")
        if self.blur_sigma_range[0] > self.blur_sigma_range[1]:
            raise ConfigurationError("blur_sigma_range must be increasing")
        if image_size is not None:
            if self.crop_size[0] > image_size[0] or self.crop_size[1] > image_size[1]:
                raise ConfigurationError(
                    f"crop {self.crop_size} exceeds image size {image_size}"
                )
