"""
Iterated-transduction bitmaps: row k holds the first `cols` symbols of
T^k(x), 1 drawn black.
"""

from typing import Iterator, List

import numpy as np
from PIL import Image

from automaton import Dfao
from config import DEFAULT_CONFIG
from errors import AlphabetMismatch, SizeLimit
from transducer import Transducer, transduce_word

DEFAULT_MAX_PIXELS = DEFAULT_CONFIG["limits"]["max_fractal_pixels"]


def fractal_rows(M: Dfao, T: Transducer, rows: int, cols: int) -> Iterator[List[int]]:
    row = M.outputs_prefix(cols)
    if set(row) - {0, 1}:
        raise AlphabetMismatch("fractal rendering needs a binary sequence")
    for _ in range(rows):
        yield row
        row = transduce_word(T, row)
        if set(row) - {0, 1}:
            raise AlphabetMismatch("fractal rendering needs a binary transducer")


def render_fractal(M: Dfao, T: Transducer, rows: int, cols: int, max_pixels=DEFAULT_MAX_PIXELS, rows_iter=None) -> np.ndarray:
    """rows x cols array of 0/1; `rows_iter` lets callers wrap the row
    generator, e.g. in a progress bar"""
    if rows * cols > max_pixels:
        raise SizeLimit(f"{rows}x{cols} bitmap exceeds {max_pixels} pixels")
    bitmap = np.zeros((rows, cols), dtype=np.uint8)
    generator = fractal_rows(M, T, rows, cols)
    if rows_iter is not None:
        generator = rows_iter(generator)
    for k, row in enumerate(generator):
        bitmap[k, :] = row
    return bitmap


def to_pbm(bitmap: np.ndarray) -> str:
    """Plain (P1) portable bitmap text"""
    rows, cols = bitmap.shape
    body = "\n".join("".join(str(int(v)) for v in row) for row in bitmap)
    return f"P1\n{cols} {rows}\n{body}\n"


def save_bitmap(bitmap: np.ndarray, path: str):
    """Write PNG (via Pillow) for .png paths, plain PBM otherwise"""
    if str(path).lower().endswith(".png"):
        pixels = np.where(bitmap == 1, 0, 255).astype(np.uint8)
        Image.fromarray(pixels).convert("1").save(path)
    else:
        with open(path, "w") as f:
            f.write(to_pbm(bitmap))
