"""Sample version of Gini's rank association coefficient."""

from __future__ import annotations

import csv
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class RankSample:
    """Paired ranks (R_i, S_i), each coordinate a permutation of 1..n."""

    ranks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple((int(r), int(s)) for r, s in self.ranks))
        n = len(self.ranks)
        if n < 2:
            raise DomainError(
                f"rank sample needs at least 2 observations, got {n}"
            )
        for label, seen in (("r", [r for r, _ in self.ranks]), ("s", [s for _, s in self.ranks])):
            expected = set(range(1, n + 1))
            got = set(seen)
            duplicates = sorted({x for x in seen if seen.count(x) > 1})
            missing = sorted(expected - got)
            if duplicates or missing:
                raise DomainError(
                    f"{label}-ranks are not a permutation of 1..{n}: "
                    f"duplicates {duplicates}, missing {missing}"
                )

    @property
    def n(self) -> int:
        return len(self.ranks)

    def to_csv(self, path) -> None:
        with open(path, "w", newline="\n") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["r", "s"])
            writer.writerows(self.ranks)

    @classmethod
    def from_csv(cls, path) -> "RankSample":
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != ["r", "s"]:
                raise DomainError(f"unexpected rank CSV header: {header}")
            pairs = [(int(row[0]), int(row[1])) for row in reader]
        return cls(tuple(pairs))


def gamma_rank_statistic(sample: RankSample) -> float:
    """Gini's rank association coefficient of a paired rank sample.

    (1 / floor(n^2/2)) * sum_i (|n+1-R_i-S_i| - |R_i-S_i|); equals 1 for
    comonotone ranks and -1 for countermonotone ranks.
    """
    n = sample.n
    total = sum(abs(n + 1 - r - s) - abs(r - s) for r, s in sample.ranks)
    return total / (n * n // 2)
