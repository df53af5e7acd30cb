#!/usr/bin/env python3
"""Regenerate the committed test fixture suite under fixtures/suite/.

The suite is a set of real photographs drawn from the scikit-image and
matplotlib sample-data collections (public-domain / CC0 sources, see
fixtures/README.md). Images are downscaled with a Lanczos filter to keep
test runtimes short, cropped so width and height are multiples of four
(so a half-scale mosaic still has even dimensions), and two of them are
saturation-reduced to provide low-chroma probes alongside the more
colorful frames.

Requires: numpy, Pillow, scikit-image, matplotlib. The PNGs are committed,
so running this script is only needed if the suite definition changes.
"""
import os
import numpy as np
from PIL import Image
import skimage.data as skd
import matplotlib

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "fixtures", "suite")


def prep(arr, max_dim):
    im = Image.fromarray(arr)
    w, h = im.size
    s = min(1.0, max_dim / max(w, h))
    if s < 1.0:
        im = im.resize((int(w * s), int(h * s)), Image.LANCZOS)
    a = np.asarray(im)
    return a[: a.shape[0] & ~3, : a.shape[1] & ~3]


def desaturate(arr, keep):
    x = arr.astype(np.float64) / 255.0
    r, g, b = x[..., 0], x[..., 1], x[..., 2]
    gray = b + 0.299 * (r - b) + 0.587 * (g - b)
    out = gray[..., None] + keep * (x - gray[..., None])
    return np.clip(np.round(out * 255), 0, 255).astype(np.uint8)


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    gh_path = os.path.join(
        os.path.dirname(matplotlib.__file__), "mpl-data", "sample_data", "grace_hopper.jpg"
    )
    moto_l, moto_r, _ = skd.stereo_motorcycle()
    suite = {
        "chelsea_muted": desaturate(prep(skd.chelsea(), 512), 0.5),
        "coffee_muted": desaturate(prep(skd.coffee(), 600), 0.5),
        "astronaut": prep(skd.astronaut(), 512),
        "grace_hopper": prep(np.asarray(Image.open(gh_path).convert("RGB")), 384),
        "hubble": prep(skd.hubble_deep_field(), 512),
        "moto_left": prep(moto_l, 370),
        "moto_right": prep(moto_r, 370),
        "rocket": prep(skd.rocket(), 640),
        "immuno": prep(skd.immunohistochemistry(), 256),
    }
    for name, arr in suite.items():
        path = os.path.join(OUT_DIR, f"{name}.png")
        Image.fromarray(arr).save(path, optimize=True)
        print(f"{path}: {arr.shape[1]}x{arr.shape[0]}")


if __name__ == "__main__":
    main()
