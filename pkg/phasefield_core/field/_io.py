from numpy import asarray, dtype, frombuffer

from ._field import ScalarField
from ._grid import Grid

MAGIC = b"ACVF"
VERSION = 1


def write_field(filepath, field):
    """
    Write a scalar field in the ACVF binary format.

    Layout, little-endian: magic ``ACVF``; version as u16; dimension n as u8;
    n node counts as u32; n (low, high) pairs as f64; row-major f64 values.
    """
    grid = field.grid
    parts = [
        MAGIC,
        asarray([VERSION], "<u2").tobytes(),
        asarray([grid.n], "<u1").tobytes(),
        asarray(grid.shape, "<u4").tobytes(),
        asarray(grid.box, "<f8").tobytes(),
        asarray(field.flat, "<f8").tobytes(),
    ]
    with open(filepath, "wb") as f:
        f.write(b"".join(parts))


def read_field(filepath):
    """
    Read a scalar field written by :func:`write_field`.
    """
    with open(filepath, "rb") as f:
        data = f.read()

    if data[:4] != MAGIC:
        raise ValueError("Not an ACVF file.")
    pos = 4
    version = int(frombuffer(data, "<u2", 1, pos)[0])
    pos += 2
    if version != VERSION:
        raise ValueError(f"Unsupported ACVF version {version}.")
    n = int(frombuffer(data, "<u1", 1, pos)[0])
    pos += 1
    shape = tuple(int(c) for c in frombuffer(data, "<u4", n, pos))
    pos += 4 * n
    box = frombuffer(data, "<f8", 2 * n, pos).reshape(n, 2)
    pos += 16 * n

    size = 1
    for c in shape:
        size *= c
    if len(data) - pos != size * dtype("<f8").itemsize:
        raise ValueError("Truncated ACVF file.")
    values = frombuffer(data, "<f8", size, pos)
    grid = Grid([tuple(b) for b in box], shape)
    return ScalarField(grid, values.reshape(shape))
