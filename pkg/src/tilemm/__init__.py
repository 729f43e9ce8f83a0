"""tilemm - tiled matrix-multiplication kernels, benchmarks and GPU execution model."""

__version__ = "0.1.0"
