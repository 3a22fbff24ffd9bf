from __future__ import annotations

import itertools
import json
import os
from collections.abc import Generator
from typing import Any

import numpy as np

from .errors import EnumerationTooLargeError, InputError

ENUMERATION_CAP_VARIABLE = "NCT_ENUMERATION_CAP"


def _cap_from_environment() -> int:
    raw = os.environ.get(ENUMERATION_CAP_VARIABLE)
    if raw is None:
        return 2 ** 16
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{ENUMERATION_CAP_VARIABLE} must be an integer, got {raw!r}")
    if cap <= 0:
        raise ValueError(f"{ENUMERATION_CAP_VARIABLE} must be positive, got {cap}")
    return cap


DEFAULT_ENUMERATION_CAP = _cap_from_environment()

# entries kept by each memo keyed on modules
CACHE_SIZE = 4096


def enumeration_size(p: int, dim: int) -> int:
    """Number of vectors in a dim-dimensional space over GF(p)"""
    return p ** dim


def enumerate_vectors(
        p: int,
        dim: int,
        cap: int = DEFAULT_ENUMERATION_CAP,
        what: str = "enumeration",
) -> Generator[tuple[int, ...]]:
    """Iterate over every coefficient vector of GF(p)^dim in lexicographic order

    Args:
      p: int: The field size
      dim: int: The dimension of the space
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The largest allowed number of vectors
      what: str: (Default value = "enumeration")
        A label used in the error message

    Yields:
      tuple[int, ...]: The coefficient vectors, the zero vector first

    Raises:
      EnumerationTooLargeError: If p^dim exceeds cap
    """
    size = enumeration_size(p, dim)
    if size > cap:
        raise EnumerationTooLargeError(size, cap, what)
    yield from itertools.product(range(p), repeat=dim)


def projective_points(
        p: int,
        dim: int,
        cap: int = DEFAULT_ENUMERATION_CAP,
        what: str = "enumeration",
) -> Generator[tuple[int, ...]]:
    """Iterate over nonzero vectors of GF(p)^dim whose first nonzero entry is 1

    Every nonzero vector is a scalar multiple of exactly one of these.

    Args:
      p: int: The field size
      dim: int: The dimension of the space
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The largest allowed number of vectors, counted over the whole space
      what: str: (Default value = "enumeration")
        A label used in the error message

    Yields:
      tuple[int, ...]: The normalized vectors
    """
    for vector in enumerate_vectors(p, dim, cap, what):
        leading = next((x for x in vector if x), 0)
        if leading == 1:
            yield vector


def seeded_rng(seed: int, *salt: int) -> np.random.Generator:
    """A numpy generator whose stream depends only on the seed and the salt

    Args:
      seed: int: The run seed
      *salt: int: Extra integers separating independent streams

    Returns:
      np.random.Generator: The generator
    """
    return np.random.default_rng([seed, *salt])


def require(condition: bool, message: str, source: str, location: str) -> None:
    """Raise InputError at location unless condition holds"""
    if not condition:
        raise InputError(message, source, location)


def require_integer(value: Any, source: str, location: str) -> int:
    require(isinstance(value, int) and not isinstance(value, bool), f"expected an integer, got {value!r}",
            source, location)
    return value


def read_json(path: str) -> Any:
    """Parse a JSON file, turning I/O and syntax failures into InputError"""
    try:
        with open(path) as f:
            return json.load(f)
    except OSError as e:
        raise InputError(f"cannot read file: {e.strerror}", path)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON: {e.msg}", path, f"line {e.lineno} column {e.colno}")
