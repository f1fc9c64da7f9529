"""
Multiscale filtering of the fractality curve
============================================

The raw log-log curve mixes all scales into one global shape. Convolving it
with the first derivative of a Gaussian at one fixed scale exposes how the
volume growth changes locally, and cutting the filtered signal after a fixed
index discards the tail where interfering dilation wavefronts turn the data
noisy. The result is a shorter, more discriminative descriptor vector.

The script writes both descriptor sets for two visually distinct textures so
they can be plotted with any external tool.
"""

import numpy as np

from fractex import (
    GrayImage,
    build_surface,
    exact_edt_volumes,
    gaussian_derivative_kernel,
    loglog_curve,
    multiscale_descriptors,
    raw_descriptors,
)
from fractex.multiscale import ScaleSpaceParams

# The filtering kernel at the default scale.
params = ScaleSpaceParams(a=0.7, threshold_index=51)
kernel = gaussian_derivative_kernel(params.a, params.kernel_radius)
print(f"kernel at a={params.a}: radius {params.kernel_radius}, sum {kernel.sum():+.1e}")
print("taps:", np.array2string(kernel, precision=4))

# Two textures: smooth sinusoid vs granular noise.
size = 64
i, _ = np.indices((size, size))
rng = np.random.default_rng(5)
textures = {
    "sinusoid": (127.5 + 127.5 * np.sin(2 * np.pi * i / 16.0)).astype(np.uint8),
    "granular": rng.integers(0, 32, (size, size)).astype(np.uint8),
}

for name, pixels in textures.items():
    _, curve = exact_edt_volumes(build_surface(GrayImage(pixels)), 10.0)
    u = loglog_curve(curve)
    raw = raw_descriptors(u)
    filtered = multiscale_descriptors(u, params)
    print(f"\n{name}: raw {len(raw)} values, filtered+thresholded {len(filtered)} values")
    print(f"  first five raw:      {np.array2string(raw.values[:5], precision=4)}")
    print(f"  first five filtered: {np.array2string(filtered.values[:5], precision=4)}")
    with open(f"descriptors_{name}.csv", "w") as fh:
        fh.write("index,raw,filtered\n")
        for k in range(len(filtered)):
            fh.write(f"{k + 1},{raw.values[k]!r},{filtered.values[k]!r}\n")
    print(f"  wrote descriptors_{name}.csv")
