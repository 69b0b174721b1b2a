"""On-disk dataset cache.

Layout: <root>/<split>/<id>.img (npy float32 HxWx3), <root>/<split>/<id>.lab
(raw uint8 bytes, row-major HxW), plus <root>/manifest.json recording the
generating spec, seed, and split membership.
"""
from __future__ import annotations

import dataclasses
import json
from pathlib import Path

import numpy as np

from ..errors import FormatError
from .generate import DatasetBundle
from .types import ClassDef, DatasetSpec, SegSample, StyleParams

_SPLITS = ("source", "target", "val")


def spec_to_dict(spec: DatasetSpec) -> dict:
    d = dataclasses.asdict(spec)
    d["classes"] = [dataclasses.asdict(c) for c in spec.classes]
    return d


def spec_from_dict(d: dict) -> DatasetSpec:
    d = dict(d)
    d["classes"] = tuple(ClassDef(**c) for c in d["classes"])
    d["image_size"] = tuple(d["image_size"])
    d["source_style"] = StyleParams(**d["source_style"])
    d["target_style"] = StyleParams(**d["target_style"])
    return DatasetSpec(**d)


def save_bundle(bundle: DatasetBundle, root: str | Path) -> Path:
    root = Path(root)
    splits = {"source": bundle.source, "target": bundle.target, "val": bundle.val}
    manifest = {
        "spec": spec_to_dict(bundle.spec),
        "seed": bundle.spec.seed,
        "image_size": list(bundle.spec.image_size),
        "splits": {},
    }
    for split, samples in splits.items():
        split_dir = root / split
        split_dir.mkdir(parents=True, exist_ok=True)
        ids = []
        for s in samples:
            np.save(split_dir / f"{s.id}.img.npy", s.image.astype(np.float32))
            (split_dir / f"{s.id}.lab").write_bytes(s.label.astype(np.uint8).tobytes())
            ids.append(s.id)
        manifest["splits"][split] = ids
    (root / "manifest.json").write_text(json.dumps(manifest, indent=1))
    return root


def load_bundle(root: str | Path) -> DatasetBundle:
    root = Path(root)
    manifest_path = root / "manifest.json"
    if not manifest_path.exists():
        raise FormatError(f"no manifest.json under {root}")
    try:
        manifest = json.loads(manifest_path.read_text())
        spec = spec_from_dict(manifest["spec"])
        h, w = manifest["image_size"]
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"bad manifest in {root}: {e}") from e
    out = {}
    for split in _SPLITS:
        samples = []
        for sid in manifest["splits"].get(split, []):
            img = np.load(root / split / f"{sid}.img.npy")
            raw = (root / split / f"{sid}.lab").read_bytes()
            lab = np.frombuffer(raw, dtype=np.uint8).reshape(h, w)
            domain = "source" if split == "source" else "target"
            samples.append(SegSample(image=img, label=lab, domain=domain, id=sid))
        out[split] = samples
    return DatasetBundle(spec=spec, source=out["source"], target=out["target"], val=out["val"])
