"""Field files in the `nsh-field v1` text format and grayscale PGM rasters.

A field file starts with one header line, the format tag followed by
`key=value` tokens separated by `; `, for example

    nsh-field v1; kind=box; n=2; lengths=6.25,3.5; R=1; N=32; M=66; repr=values

and continues with CSV rows. With `repr=values` the rows hold the grid values
in row-major order, one row per index of the leading axes; the grid
coordinates are implied by the header. With `repr=coeffs` the rows hold the
coefficient array in the same layout, torus files append the imaginary parts
as a second block of rows. Torus headers also carry `generators=`, the
generator matrix row-major.
"""

import logging
from pathlib import Path

import numpy as np

from ..core import make_basis
from ..domain import DomainKind, make_domain
from ..exceptions import ConfigurationError
from ..field import SpectralField

# Get logger
logger = logging.getLogger(__name__)

FORMAT_TAG = "nsh-field v1"
REPRESENTATIONS = ("values", "coeffs")
SEPARATOR = "; "

_REQUIRED_KEYS = {"kind", "n", "lengths", "R", "N", "M", "repr"}


def _join(values: np.ndarray | list[float]) -> str:
    return ",".join(format(float(v), ".17g") for v in np.ravel(values))


def header_line(u: SpectralField, representation: str = "values") -> str:
    """Header line describing the domain and the discretization of a field.

    Args:
        u: Field to describe.
        representation: `values` or `coeffs`.

    Returns:
        The header line without a trailing newline.
    """
    domain = u.domain
    if domain.kind is DomainKind.BOX:
        lengths = list(domain.lengths or ())
    else:
        lengths = np.linalg.norm(domain.matrix, axis=0).tolist()
    tokens = [
        FORMAT_TAG,
        f"kind={domain.kind.value}",
        f"n={domain.dimension}",
        f"lengths={_join(lengths)}",
        f"R={domain.stretch:.17g}",
        f"N={u.modes}",
        f"M={u.basis.grid}",
        f"repr={representation}",
    ]
    if domain.kind is DomainKind.TORUS:
        tokens.append(f"generators={_join(domain.matrix)}")
    return SEPARATOR.join(tokens)


def _rows(array: np.ndarray) -> np.ndarray:
    """Row-major 2D view: the last axis runs along each row."""
    return array.reshape(-1, array.shape[-1])


def write_field(u: SpectralField, path: Path, representation: str = "values") -> Path:
    """Write a field in the nsh-field format with 17 significant digits.

    Args:
        u: Field to write.
        path: Target file.
        representation: `values` for grid values, `coeffs` for spectral coefficients.

    Returns:
        The path written.
    """
    if representation not in REPRESENTATIONS:
        raise ConfigurationError(f"Unknown field representation '{representation}'")
    if representation == "values":
        rows = _rows(np.asarray(u.values))
    else:
        coeffs = np.asarray(u.coeffs)
        rows = _rows(coeffs.real)
        if np.iscomplexobj(coeffs):
            rows = np.vstack([rows, _rows(coeffs.imag)])
    np.savetxt(
        path, rows, fmt="%.17g", delimiter=",", header=header_line(u, representation), comments=""
    )
    logger.debug(f"Wrote {representation} of n={u.domain.dimension} field to {path}")
    return path


def parse_header(line: str, path: Path) -> dict[str, str]:
    """Split a header line into its `key=value` tokens.

    Raises:
        ConfigurationError: If the format tag or a required key is missing.
    """
    tokens = [token.strip() for token in line.strip().split(";")]
    if not tokens or tokens[0] != FORMAT_TAG:
        raise ConfigurationError(f"'{path}' is not an {FORMAT_TAG} file")
    meta: dict[str, str] = {}
    for token in tokens[1:]:
        key, sep, value = token.partition("=")
        if not sep:
            raise ConfigurationError(f"Malformed header token '{token}' in '{path}'")
        meta[key.strip()] = value.strip()
    missing = _REQUIRED_KEYS - set(meta)
    if missing:
        raise ConfigurationError(f"Header of '{path}' lacks {', '.join(sorted(missing))}")
    return meta


def read_field(path: Path) -> SpectralField:
    """Read a field written by write_field().

    Raises:
        ConfigurationError: For unreadable files, malformed headers, or data
            inconsistent with the declared discretization.
    """
    try:
        with open(path, encoding="utf-8") as f:
            first = f.readline()
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    except (OSError, ValueError) as e:
        raise ConfigurationError(f"Cannot read field file '{path}': {e}") from e

    meta = parse_header(first, path)
    try:
        n = int(meta["n"])
        kind = DomainKind(meta["kind"])
        if kind is DomainKind.BOX:
            lengths = [float(v) for v in meta["lengths"].split(",")]
            domain = make_domain(kind, lengths, float(meta["R"]))
        else:
            numbers = [float(v) for v in meta["generators"].split(",")]
            rows = np.array(numbers).reshape(n, n)
            domain = make_domain(kind, rows.tolist(), float(meta["R"]))
        basis = make_basis(domain, int(meta["N"]), int(meta["M"]))
    except (KeyError, ValueError) as e:
        raise ConfigurationError(f"Invalid domain in header of '{path}': {e}") from e

    if meta["repr"] == "values":
        expected = _rows(np.zeros(basis.grid_shape)).shape
        if data.shape != expected:
            raise ConfigurationError(
                f"'{path}' has {data.shape} entries, expected the grid {expected}"
            )
        return SpectralField.from_values(basis, data.reshape(basis.grid_shape))
    if meta["repr"] == "coeffs":
        block = _rows(np.zeros(basis.coeff_shape)).shape
        blocks = 2 if kind is DomainKind.TORUS else 1
        expected = (block[0] * blocks, block[1])
        if data.shape != expected:
            raise ConfigurationError(
                f"'{path}' has {data.shape} entries, expected the modes {expected}"
            )
        coeffs = data[: block[0]].reshape(basis.coeff_shape)
        if kind is DomainKind.TORUS:
            coeffs = coeffs + 1j * data[block[0] :].reshape(basis.coeff_shape)
        return SpectralField(basis, coeffs)
    raise ConfigurationError(f"Unknown representation '{meta['repr']}' in '{path}'")


def write_pgm(u: SpectralField, path: Path, rows_1d: int = 64) -> Path:
    """Write grid values as an 8-bit grayscale PGM, black at min and white at max.

    3D fields are cut at the middle of the last axis; 1D fields are repeated as rows.
    """
    values = np.asarray(u.values)
    if values.ndim == 3:
        values = values[:, :, values.shape[2] // 2]
    elif values.ndim == 1:
        values = np.tile(values[:, None], (1, rows_1d))
    low, high = float(np.min(values)), float(np.max(values))
    span = high - low
    scaled = (values - low) / span if span > 0 else np.zeros_like(values)
    # first axis runs along the image width
    pixels = np.round(255 * scaled.T[::-1]).astype(np.uint8)
    height, width = pixels.shape
    with open(path, "wb") as f:
        f.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        f.write(pixels.tobytes())
    return path
