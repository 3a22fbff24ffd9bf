from __future__ import annotations

import argparse
from dataclasses import dataclass

from ..shared import DEFAULT_ENUMERATION_CAP

TEXT = "text"
JSON = "json"


@dataclass(frozen=True)
class RunConfig:
    """The knobs shared by every command

    Attributes:
      seed: int: Seed for every randomized step, recorded in the report
      enumeration_cap: int: The largest space enumerated exhaustively
      depth: int: How many multiples of n the syzygy and ladder checks reach
      output_format: str: "text" or "json"
      timing: bool: Whether elapsed_ms is filled in
      verbosity: int: 0 for warnings, 1 for info, 2 for debug logging
    """
    seed: int = 0
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    depth: int = 2
    output_format: str = TEXT
    timing: bool = False
    verbosity: int = 0

    def __post_init__(self: RunConfig) -> None:
        if self.enumeration_cap <= 0:
            raise ValueError(f"enumeration cap must be positive, got {self.enumeration_cap}")
        if self.depth < 1:
            raise ValueError(f"depth must be at least 1, got {self.depth}")
        if self.output_format not in (TEXT, JSON):
            raise ValueError(f"unknown output format {self.output_format!r}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        return cls(
            seed=args.seed,
            enumeration_cap=args.cap,
            depth=args.depth,
            output_format=args.format,
            timing=args.timing,
            verbosity=args.verbose,
        )
