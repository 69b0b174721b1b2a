"""Cropping and photometric augmentation.

Cropping changes image and label identically; photometric augmentation
never touches the label. Both are pure functions of (inputs, RNG state).
"""
from __future__ import annotations

import numpy as np
from scipy.ndimage import gaussian_filter

from ..errors import ConfigurationError
from .types import AugmentationParams, SegSample


def random_crop(sample: SegSample, size: tuple[int, int],
                rng: np.random.Generator) -> SegSample:
    """Crop the same window out of image and label.

    Draw order: top = integers(0, H-h+1), then left = integers(0, W-w+1).
    """
    h, w = size
    H, W = sample.label.shape
    if h > H or w > W:
        raise ConfigurationError(f"crop {size} exceeds image {(H, W)}")
    top = int(rng.integers(0, H - h + 1))
    left = int(rng.integers(0, W - w + 1))
    return SegSample(
        image=sample.image[top : top + h, left : left + w],
        label=sample.label[top : top + h, left : left + w],
        domain=sample.domain,
        id=sample.id,
    )


def jitter_image(image: np.ndarray, strength: float,
                 rng: np.random.Generator) -> np.ndarray:
    """Per-channel affine a*x + b with a ~ U(1-s, 1+s), b ~ U(-s, s), clipped to [0, 1].

    Draws a for all channels first, then b for all channels.
    """
    a = rng.uniform(1.0 - strength, 1.0 + strength, size=3)
    b = rng.uniform(-strength, strength, size=3)
    out = image * a[None, None, :].astype(np.float32) + b[None, None, :].astype(np.float32)
    return np.clip(out, 0.0, 1.0).astype(np.float32)


def augment(sample: SegSample, params: AugmentationParams,
            rng: np.random.Generator) -> SegSample:
    """Color jitter then optional Gaussian blur. Zero-strength params are identity.

    Degenerate settings consume no RNG draws: jitter draws only happen for
    strength > 0, the blur coin flip only for blur_prob > 0.
    """
    params.validate()
    image = sample.image
    if params.jitter_strength > 0.0:
        image = jitter_image(image, params.jitter_strength, rng)
    if params.blur_prob > 0.0 and rng.random() < params.blur_prob:
        sigma = rng.uniform(*params.blur_sigma_range)
        image = gaussian_filter(image, sigma=(sigma, sigma, 0.0))
        image = np.clip(image, 0.0, 1.0).astype(np.float32)
    if image is sample.image:
        return sample
    return SegSample(image=image, label=sample.label, domain=sample.domain, id=sample.id)
