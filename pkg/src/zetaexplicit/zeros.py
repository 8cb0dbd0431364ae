"""Tables of ordinates of zeros of zeta and Dirichlet L-functions.

Files hold one ordinate per line; ``#`` starts a comment.  L-function files
start with a ``# L q=<q> chi=<index>`` header.  For complex characters the
negative ordinates live in a sibling ``*_neg.txt`` file, stored as absolute
values so that both files are increasing.
"""

from __future__ import annotations

import math
import os
import re
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np
from scipy.special import loggamma

from .errors import FormatError, IntegrityError
from .special import dirichlet_l, zeta

ZERO_DIR_ENV = "ZETAEXPLICIT_ZERO_DIR"
_HEADER = re.compile(r"#\s*L\s+q=(\d+)\s+chi=(\d+)")


@dataclass(frozen=True)
class ZeroRecord:
    index: int
    ordinate: float
    source: str = ""


@dataclass(frozen=True)
class CatalogKind:
    family: str = "zeta"  # "zeta" or "dirichlet"
    q: int | None = None
    chi: int | None = None

    @classmethod
    def dirichlet(cls, q: int, chi: int) -> "CatalogKind":
        return cls("dirichlet", q, chi)

    def __str__(self) -> str:
        return "zeta" if self.family == "zeta" else f"dirichlet(q={self.q}, chi={self.chi})"


ZETA = CatalogKind()


@dataclass(frozen=True)
class ZeroCatalog:
    records: tuple[ZeroRecord, ...]
    kind: CatalogKind = ZETA
    negative: tuple[ZeroRecord, ...] | None = None  # magnitudes; None = mirror image
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.records)

    @property
    def ordinates(self) -> np.ndarray:
        if "pos" not in self._cache:
            self._cache["pos"] = np.array([r.ordinate for r in self.records], dtype=float)
        return self._cache["pos"]

    @property
    def negative_ordinates(self) -> np.ndarray:
        """Magnitudes of the negative ordinates (equal to ``ordinates`` for real characters)."""
        if self.negative is None:
            return self.ordinates
        if "neg" not in self._cache:
            self._cache["neg"] = np.array([r.ordinate for r in self.negative], dtype=float)
        return self._cache["neg"]

    def first(self, n: int) -> np.ndarray:
        return self.ordinates[:n]

    def zeros_up_to(self, T: float) -> np.ndarray:
        return self.ordinates[: nth_pair_count_for_T(self, T)]

    def signed_ordinates(self, n: int) -> np.ndarray:
        """n positive and n negative ordinates (with sign) for L-function sums."""
        return np.concatenate([self.ordinates[:n], -self.negative_ordinates[:n]])


def nth_pair_count_for_T(catalog: ZeroCatalog, T: float) -> int:
    """Number of ordinates strictly below T."""
    return int(np.searchsorted(catalog.ordinates, T, side="left"))


def parse_zero_text(text: str, kind: CatalogKind | None = None, source: str = "") -> ZeroCatalog:
    values: list[float] = []
    header_kind = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _HEADER.match(line)
            if m and header_kind is None:
                header_kind = CatalogKind.dirichlet(int(m.group(1)), int(m.group(2)))
            continue
        token = line.split("#", 1)[0].strip()
        try:
            v = float(token)
        except ValueError:
            raise FormatError(f"cannot parse {token!r} as an ordinate", lineno) from None
        if not math.isfinite(v):
            raise FormatError(f"non-finite ordinate {token!r}", lineno)
        if v <= 0:
            raise IntegrityError(f"line {lineno}: ordinates must be positive, got {v}")
        if values and v <= values[-1]:
            raise IntegrityError(f"line {lineno}: ordinates not strictly increasing ({values[-1]} then {v})")
        values.append(v)
    if kind is None:
        kind = header_kind or ZETA
    elif header_kind is not None and header_kind != kind:
        raise IntegrityError(f"header says {header_kind}, caller expects {kind}")
    if not values:
        warnings.warn(f"zero table {source or '<text>'} is empty", stacklevel=3)
    records = tuple(ZeroRecord(i + 1, v, source) for i, v in enumerate(values))
    return ZeroCatalog(records, kind)


def load_zeros(path, kind: CatalogKind | None = None, negative_path=None) -> ZeroCatalog:
    """Read a zero table; for complex characters pass the ``_neg`` file too."""
    path = Path(path)
    cat = parse_zero_text(path.read_text(), kind, str(path))
    if negative_path is None:
        sibling = path.with_name(path.stem + "_neg" + path.suffix)
        if cat.kind.family == "dirichlet" and sibling.exists():
            negative_path = sibling
    if negative_path is not None:
        neg = parse_zero_text(Path(negative_path).read_text(), cat.kind, str(negative_path))
        cat = ZeroCatalog(cat.records, cat.kind, neg.records)
    return cat


def serialize(catalog: ZeroCatalog, path, digits: int = 15) -> list[Path]:
    """Write the catalog (and its negative list, if any); returns the paths written."""
    path = Path(path)

    def dump(p: Path, recs) -> None:
        lines = []
        if catalog.kind.family == "dirichlet":
            lines.append(f"# L q={catalog.kind.q} chi={catalog.kind.chi}")
        lines += [f"{r.ordinate:.{digits}g}" for r in recs]
        p.write_text("\n".join(lines) + "\n")

    dump(path, catalog.records)
    written = [path]
    if catalog.negative is not None:
        neg = path.with_name(path.stem + "_neg" + path.suffix)
        dump(neg, catalog.negative)
        written.append(neg)
    return written


# shipped tables ------------------------------------------------------------------


def zero_dir() -> Path:
    env = os.environ.get(ZERO_DIR_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("zetaexplicit") / "data"))


@lru_cache(maxsize=None)
def _load_cached(path: str) -> ZeroCatalog:
    return load_zeros(path)


def default_zeta_catalog(directory=None) -> ZeroCatalog:
    d = Path(directory) if directory else zero_dir()
    return _load_cached(str(d / "zeta_zeros.txt"))


def default_l_catalog(q: int, chi: int, directory=None) -> ZeroCatalog:
    d = Path(directory) if directory else zero_dir()
    return _load_cached(str(d / f"L_q{q}_chi{chi}.txt"))


# validation ------------------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    count: int
    tolerance: float
    max_residual: float
    worst_index: int | None
    failures: tuple[int, ...]
    scan_height: float | None = None
    scan_sign_changes: int | None = None
    catalog_count_below_scan: int | None = None

    @property
    def ok(self) -> bool:
        scan_ok = self.scan_sign_changes is None or self.scan_sign_changes == self.catalog_count_below_scan
        return not self.failures and scan_ok


def hardy_z(t) -> np.ndarray:
    """Z(t) = exp(i theta(t)) zeta(1/2 + i t), real for real t."""
    t = np.asarray(t, dtype=float)
    theta = loggamma(0.25 + 0.5j * t).imag - 0.5 * t * np.log(np.pi)
    return (np.exp(1j * theta) * np.asarray(zeta(0.5 + 1j * t))).real


def _residuals(catalog: ZeroCatalog) -> np.ndarray:
    if catalog.kind.family == "zeta":
        return np.abs(np.asarray(zeta(0.5 + 1j * catalog.ordinates)))
    from .dirichlet import characters_mod

    chi = characters_mod(catalog.kind.q).values(catalog.kind.chi)
    res = np.abs(np.asarray(dirichlet_l(0.5 + 1j * catalog.ordinates, chi)))
    if catalog.negative is not None:
        neg = np.abs(np.asarray(dirichlet_l(0.5 - 1j * catalog.negative_ordinates, chi)))
        res = np.concatenate([res, neg])
    return res


def validate(catalog: ZeroCatalog, tolerance: float = 1e-6, scan_height: float | None = None) -> ValidationReport:
    """Check |zeta(1/2 + i t)| (or |L|) <= tolerance at every ordinate.

    With ``scan_height`` (zeta only) the sign changes of Hardy's Z below that
    height are counted on a fine grid and compared with the table; this is a
    best-effort completeness check.
    """
    res = _residuals(catalog) if len(catalog) else np.zeros(0)
    bad = tuple(int(i) + 1 for i in np.nonzero(res > tolerance)[0])
    worst = int(np.argmax(res)) + 1 if res.size else None
    scan = None
    below = None
    if scan_height is not None and catalog.kind.family == "zeta":
        grid = np.arange(1.0, scan_height, 0.01)
        z = hardy_z(grid)
        scan = int(np.count_nonzero(np.sign(z[1:]) != np.sign(z[:-1])))
        below = int(np.count_nonzero(catalog.ordinates < grid[-1]))
    return ValidationReport(
        count=len(catalog),
        tolerance=tolerance,
        max_residual=float(res.max()) if res.size else 0.0,
        worst_index=worst,
        failures=bad,
        scan_height=scan_height,
        scan_sign_changes=scan,
        catalog_count_below_scan=below,
    )
