from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime

MAX_PRIME = 2 ** 31 - 1


@dataclass(frozen=True)
class PrimeField:
    """The prime field GF(p)

    Elements are plain Python or numpy integers held as canonical residues
    in [0, p).

    Attributes:
      p: int: The prime modulus, 2 <= p <= 2^31 - 1
    """
    p: int

    def __post_init__(self: PrimeField) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError(f"field modulus must be an int, got {type(self.p).__name__}")
        if not 2 <= self.p <= MAX_PRIME:
            raise ValueError(f"field modulus {self.p} outside [2, {MAX_PRIME}]")
        if not isprime(self.p):
            raise ValueError(f"field modulus {self.p} is not prime")

    def reduce(self: PrimeField, x: int) -> int:
        return int(x) % self.p

    def inverse(self: PrimeField, x: int) -> int:
        x = self.reduce(x)
        if x == 0:
            raise ZeroDivisionError("0 has no inverse in GF(p)")
        return pow(x, -1, self.p)

    def negate(self: PrimeField, x: int) -> int:
        return (-int(x)) % self.p

    def elements(self: PrimeField) -> range:
        return range(self.p)

    def __str__(self: PrimeField) -> str:
        return f"GF({self.p})"
