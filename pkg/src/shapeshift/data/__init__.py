from .types import (
    IGNORE,
    AugmentationParams,
    ClassDef,
    DatasetSpec,
    SegSample,
    StyleParams,
)
from .generate import (
    DatasetBundle,
    build_bundle,
    default_classes,
    default_spec,
    generate_dataset,
    generate_split,
    render_proxy_sample,
    render_sample,
)
from .augment import augment, jitter_image, random_crop
from .cache import load_bundle, save_bundle, spec_from_dict, spec_to_dict

__all__ = [
    "IGNORE",
    "AugmentationParams",
    "ClassDef",
    "DatasetSpec",
    "SegSample",
    "StyleParams",
    "DatasetBundle",
    "build_bundle",
    "default_classes",
    "default_spec",
    "generate_dataset",
    "generate_split",
    "render_proxy_sample",
    "render_sample",
    "augment",
    "jitter_image",
    "random_crop",
    "load_bundle",
    "save_bundle",
    "spec_from_dict",
    "spec_to_dict",
]
