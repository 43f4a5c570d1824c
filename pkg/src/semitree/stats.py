"""Per-genus statistics over the semigroup tree and the strong-count diagonal tables."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .errors import InsufficientRange
from .tree import run_partitioned
from .tree_a import fibonacci

CONVENTIONS = {False: "exclude-ordinary", True: "include-ordinary"}


@dataclass
class GenusStats:
    g: int
    n: int = 0
    strong: int = 0
    weak: int = 0
    strong_hist: dict[int, int] = field(default_factory=dict)
    leaf: int = 0
    stick: int = 0
    bush: int = 0
    symmetric: int = 0
    pseudo_symmetric: int = 0
    hyperelliptic: int = 0
    arf: int = 0
    ordinary: int = 0
    irreducible: int = 0

    def merge(self, other: "GenusStats") -> "GenusStats":
        assert self.g == other.g
        hist = dict(self.strong_hist)
        for i, v in other.strong_hist.items():
            hist[i] = hist.get(i, 0) + v
        return GenusStats(
            self.g,
            self.n + other.n,
            self.strong + other.strong,
            self.weak + other.weak,
            dict(sorted(hist.items())),
            self.leaf + other.leaf,
            self.stick + other.stick,
            self.bush + other.bush,
            self.symmetric + other.symmetric,
            self.pseudo_symmetric + other.pseudo_symmetric,
            self.hyperelliptic + other.hyperelliptic,
            self.arf + other.arf,
            self.ordinary + other.ordinary,
            self.irreducible + other.irreducible,
        )

    def n_strong(self, i: int) -> int:
        return self.strong_hist.get(i, 0)


def merge_tables(a: list[GenusStats], b: list[GenusStats]) -> list[GenusStats]:
    return [x.merge(y) for x, y in zip(a, b)]


def _arf_masks(mask: int, c: int) -> bool:
    """Arf test on the walker's bitmask (members above ``c`` are all set)."""
    small = [n for n in range(1, c) if (mask >> n) & 1]
    for jj, y in enumerate(small):
        upper = (mask >> y << y) & ((1 << c) - 1)
        for z in small[:jj]:
            shifted = upper << (y - z)
            if shifted & ~mask:
                return False
    return True


class _StatsTask:
    def __init__(self, max_genus: int, include_ordinary: bool):
        self.max_genus = max_genus
        self.include_ordinary = include_ordinary

    def __call__(self, frames, width):
        size = self.max_genus + 1
        table = [GenusStats(g) for g in range(size)]
        hists = [dict() for _ in range(size)]
        include = self.include_ordinary
        for frame, strong in frames:
            mask, _, c, g, m, eff = frame
            row = table[g]
            row.n += 1
            k = len(eff)
            if k == 0:
                row.leaf += 1
            elif k == 1:
                row.stick += 1
            else:
                row.bush += 1
            ordinary = c == 0 or m == c
            if ordinary:
                row.ordinary += 1
            if ordinary and not include:
                s = 0
            else:
                s = sum(strong)
                row.strong += s
                row.weak += k - s
            h = hists[g]
            h[s] = h.get(s, 0) + 1
            if c == 2 * g:
                row.symmetric += 1
                row.irreducible += 1
            elif c == 2 * g - 1:
                row.pseudo_symmetric += 1
                row.irreducible += 1
            if m == 2:
                row.hyperelliptic += 1
            if _arf_masks(mask, c):
                row.arf += 1
        for row, h in zip(table, hists):
            row.strong_hist = dict(sorted(h.items()))
        return table


def aggregate(max_genus: int, *, include_ordinary: bool = False, workers: int = 1,
              split_genus: int | None = None) -> list[GenusStats]:
    """One row per genus ``0..max_genus`` from a single walk of the tree.

    By default ordinary nodes contribute nothing to the strong/weak counts and
    sit in the zero-strong bucket; ``include_ordinary`` counts their
    generators by whether removal creates any new effective generator.
    """
    if max_genus < 0:
        raise ValueError("max_genus must be non-negative")
    return run_partitioned(max_genus, _StatsTask(max_genus, include_ordinary), merge_tables,
                           workers=workers, split_genus=split_genus)


# -- diagonal tables --------------------------------------------------------


@dataclass(frozen=True)
class DiagonalEntry:
    j: int
    samples: tuple[tuple[int, int], ...]  # (genus, count)
    value: int | None
    stabilized: bool


@dataclass(frozen=True)
class EODiagonals:
    e: tuple[DiagonalEntry, ...]
    o: tuple[DiagonalEntry, ...]
    genus_offset: int

    def e_prefix(self) -> list[int | None]:
        return [d.value if d.stabilized else None for d in self.e]

    def o_prefix(self) -> list[int | None]:
        return [d.value if d.stabilized else None for d in self.o]


def _diagonal(stats, j, parity, offset):
    samples = []
    for row in stats:
        gp = row.g + offset
        if gp < 1 or gp % 2 != parity:
            continue
        i = (gp - 1) // 2 - j
        if i < 0:
            continue
        samples.append((row.g, row.n_strong(i)))
    values = [v for _, v in samples]
    stable = len(values) >= 3 and values[-1] == values[-2] == values[-3]
    return DiagonalEntry(j, tuple(samples), values[-1] if values else None, stable)


def eo_diagonals(stats: list[GenusStats], *, j_max: int | None = None,
                 genus_offset: int = 0) -> EODiagonals:
    """Values ``n^{floor((g-1)/2) - j}_g`` along even (``e``) and odd (``o``) genus.

    ``genus_offset`` shifts the genus used for parity and diagonal index
    (0 reads the tables literally). An entry is stabilized when its last
    three samples agree.
    """
    top = max(row.g for row in stats)
    if j_max is None:
        j_max = (top - 4) // 2
    if top < 2 * j_max + 4:
        raise InsufficientRange(f"need genus >= {2 * j_max + 4} for j = {j_max}, have {top}")
    e = tuple(_diagonal(stats, j, 0, genus_offset) for j in range(j_max + 1))
    o = tuple(_diagonal(stats, j, 1, genus_offset) for j in range(j_max + 1))
    return EODiagonals(e, o, genus_offset)


def is_superincreasing(seq) -> bool:
    return all(seq[j] >= sum(seq[:j]) for j in range(len(seq)))


def strong_weak_ratio(row: GenusStats) -> float:
    return row.strong / row.weak if row.weak else float("inf")


@dataclass(frozen=True)
class BoundsRow:
    g: int
    n: int
    lower: int
    upper: int

    @property
    def lower_ok(self) -> bool:
        return self.lower <= self.n

    @property
    def upper_ok(self) -> bool:
        return self.n <= self.upper


def bounds_report(stats: list[GenusStats]) -> list[BoundsRow]:
    return [BoundsRow(r.g, r.n, 2 * fibonacci(r.g), 1 + 3 * 2 ** (r.g - 3)) for r in stats if r.g >= 3]


def tree_label_histograms(max_genus: int) -> list[dict[int, int]]:
    """Per genus, how many nodes have each number of children."""
    return run_partitioned(max_genus, _LabelTask(max_genus), _merge_hists)


class _LabelTask:
    def __init__(self, max_genus):
        self.max_genus = max_genus

    def __call__(self, frames, width):
        out = [dict() for _ in range(self.max_genus + 1)]
        for frame, _ in frames:
            h = out[frame[3]]
            k = len(frame[5])
            h[k] = h.get(k, 0) + 1
        return out


def _merge_hists(a, b):
    out = []
    for x, y in zip(a, b):
        z = dict(x)
        for k, v in y.items():
            z[k] = z.get(k, 0) + v
        out.append(z)
    return out


# -- output -----------------------------------------------------------------

COLUMNS = ["g", "n_g", "S_g", "W_g", "ratio", "leaf", "stick", "bush",
           "sym", "psym", "hyp", "arf", "ord"]


def _hist_width(stats) -> int:
    return max((max(r.strong_hist, default=0) for r in stats), default=0) + 1


def _ratio(stats, idx) -> str:
    if idx == 0 or stats[idx - 1].n == 0:
        return ""
    return f"{stats[idx].n / stats[idx - 1].n:.6f}"


def to_csv(stats: list[GenusStats], include_ordinary: bool = False) -> str:
    """CSV table; ``ratio`` is ``n_g / n_{g-1}``."""
    buf = io.StringIO()
    buf.write(f"# strength convention: {CONVENTIONS[include_ordinary]}\n")
    width = _hist_width(stats)
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS + [f"n{i}" for i in range(width)])
    for idx, r in enumerate(stats):
        writer.writerow([r.g, r.n, r.strong, r.weak, _ratio(stats, idx), r.leaf, r.stick, r.bush,
                         r.symmetric, r.pseudo_symmetric, r.hyperelliptic, r.arf, r.ordinary]
                        + [r.n_strong(i) for i in range(width)])
    return buf.getvalue()


def to_json(stats: list[GenusStats], include_ordinary: bool = False) -> str:
    rows = []
    for idx, r in enumerate(stats):
        rows.append({
            "g": r.g, "n_g": r.n, "S_g": r.strong, "W_g": r.weak, "ratio": _ratio(stats, idx),
            "leaf": r.leaf, "stick": r.stick, "bush": r.bush,
            "sym": r.symmetric, "psym": r.pseudo_symmetric, "hyp": r.hyperelliptic,
            "arf": r.arf, "ord": r.ordinary, "irr": r.irreducible,
            "strong_hist": {str(i): v for i, v in sorted(r.strong_hist.items())},
        })
    return json.dumps({"convention": CONVENTIONS[include_ordinary], "rows": rows}, indent=2) + "\n"


def plot_data(stats: list[GenusStats]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["g", "n_g", "lower_2F_g", "upper_1_3_2^(g-3)"])
    for r in stats:
        upper = 1 + 3 * 2 ** (r.g - 3) if r.g >= 3 else ""
        writer.writerow([r.g, r.n, 2 * fibonacci(r.g), upper])
    return buf.getvalue()
