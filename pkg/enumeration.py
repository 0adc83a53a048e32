import os
import random
import hashlib
from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

import global_data
from semigroup_core import (
    BudgetExceeded, FiniteSemigroup, SemigroupError, first_associativity_violation, opposite, validate,
)
from utils import logger

DEDUP_MODES = ('none', 'iso', 'iso_and_anti')
CACHE_VERSION = 'v1'


class CatalogError(ValueError):
    pass


class CacheError(ValueError):
    pass


class CacheVersionError(CacheError):
    pass


# ---------- catalog ----------

@dataclass(frozen=True)
class CatalogSpec:
    name: str
    params: Tuple[int, ...]

    def __str__(self):
        return ':'.join([self.name] + [str(p) for p in self.params])


def _left_zero(n):
    return [[a for _ in range(n)] for a in range(n)]


def _right_zero(n):
    return [list(range(n)) for _ in range(n)]


def _null(n):
    return [[0] * n for _ in range(n)]


def _cyclic_group(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def _chain_semilattice(n):
    return [[min(a, b) for b in range(n)] for a in range(n)]


def _rectangular_band(p, q):
    # (a, b) sits at a*q + b; (a, b)(c, d) = (a, d)
    return [[(x // q) * q + y % q for y in range(p * q)] for x in range(p * q)]


CATALOG_BUILDERS: Dict[str, Tuple[int, Callable[..., List[List[int]]]]] = {
    'left_zero': (1, _left_zero),
    'right_zero': (1, _right_zero),
    'null': (1, _null),
    'cyclic_group': (1, _cyclic_group),
    'chain_semilattice': (1, _chain_semilattice),
    'rectangular_band': (2, _rectangular_band),
}


def catalog(spec: CatalogSpec) -> FiniteSemigroup:
    if spec.name not in CATALOG_BUILDERS:
        raise CatalogError(f"Unknown catalog family {spec.name!r}; expected one of {sorted(CATALOG_BUILDERS)}")
    arity, builder = CATALOG_BUILDERS[spec.name]
    if len(spec.params) != arity:
        raise CatalogError(f"{spec.name} takes {arity} size parameter(s), got {len(spec.params)}")
    if any(p < 1 for p in spec.params):
        raise CatalogError(f"Size parameters must be positive, got {spec.params}")
    return validate(builder(*spec.params))


def parse_catalog_spec(text: str) -> CatalogSpec:
    """'left_zero:3' or 'rectangular_band:2:2'."""
    name, *rest = text.strip().split(':')
    try:
        params = tuple(int(p) for p in rest)
    except ValueError:
        raise CatalogError(f"Malformed catalog spec {text!r}")
    return CatalogSpec(name, params)


# ---------- canonical forms ----------

def relabel(S: FiniteSemigroup, perm: Sequence[int]) -> FiniteSemigroup:
    """The isomorphic copy in which element a is renamed perm[a]."""
    n = S.order
    if sorted(perm) != list(range(n)):
        raise SemigroupError(f"{list(perm)} is not a permutation of 0..{n - 1}")
    rows = [[0] * n for _ in range(n)]
    for a in S.elements:
        for b in S.elements:
            rows[perm[a]][perm[b]] = perm[S.table[a][b]]
    return FiniteSemigroup(tuple(tuple(row) for row in rows))


def canonical_form(S: FiniteSemigroup, include_anti: bool = False, bound: Optional[int] = None) -> FiniteSemigroup:
    """Lexicographically least relabelled table (also over the opposite table if include_anti)."""
    bound = global_data.canonical_order_bound if bound is None else bound
    if S.order > bound:
        raise BudgetExceeded(f"Canonical form refused: order {S.order} exceeds bound {bound}")
    sources = [S, opposite(S)] if include_anti else [S]
    T = np.stack([src.array for src in sources])
    best = None
    for perm in permutations(range(S.order)):
        p = np.array(perm, dtype=np.int64)
        inverse = np.argsort(p)
        for table in T:
            # relabelled[i][j] = p[table[inv[i]][inv[j]]]
            candidate = tuple(p[table[np.ix_(inverse, inverse)]].ravel().tolist())
            if best is None or candidate < best:
                best = candidate
    n = S.order
    return FiniteSemigroup(tuple(tuple(best[i * n:(i + 1) * n]) for i in range(n)))


def semigroup_hash(S: FiniteSemigroup) -> str:
    canon = canonical_form(S) if S.order <= global_data.canonical_order_bound else S
    text = ';'.join(','.join(str(x) for x in row) for row in canon.table)
    return hashlib.sha256(text.encode('utf-8')).hexdigest()[:16]


# ---------- exhaustive search ----------

def _consistent(T: List[List[int]], a: int, b: int, n: int) -> bool:
    """Every fully defined triple that uses cell (a, b) associates."""
    v = T[a][b]
    for z in range(n):
        # (a b) z = a (b z)
        bz = T[b][z]
        if bz >= 0 and T[v][z] >= 0 and T[a][bz] >= 0 and T[v][z] != T[a][bz]:
            return False
        # (x a) b = x (a b)
        xa = T[z][a]
        if xa >= 0 and T[xa][b] >= 0 and T[z][v] >= 0 and T[xa][b] != T[z][v]:
            return False
    for x in range(n):
        for y in range(n):
            xy = T[x][y]
            # (x y) b = x (y b) with xy = a
            if xy == a:
                yb = T[y][b]
                if yb >= 0 and T[x][yb] >= 0 and T[x][yb] != v:
                    return False
            # (a x) y = a (x y) with xy = b
            if xy == b:
                ax = T[a][x]
                if ax >= 0 and T[ax][y] >= 0 and T[ax][y] != v:
                    return False
    return True


def _backtrack(n: int, value_order: Callable[[], Sequence[int]]) -> Iterator[List[List[int]]]:
    T = [[-1] * n for _ in range(n)]
    cells = [(a, b) for a in range(n) for b in range(n)]
    nodes = 0

    def fill(i: int):
        nonlocal nodes
        if i == len(cells):
            yield [row[:] for row in T]
            return
        a, b = cells[i]
        for v in value_order():
            nodes += 1
            T[a][b] = v
            if _consistent(T, a, b, n):
                yield from fill(i + 1)
        T[a][b] = -1

    yield from fill(0)
    logger.debug(f"backtracking order {n}: {nodes} nodes visited")


def _labeled_semigroups(n: int) -> Iterator[FiniteSemigroup]:
    for rows in _backtrack(n, lambda: range(n)):
        yield validate(rows)


def enumerate_semigroups(n: int, dedup: str = 'none', bound: Optional[int] = None) -> Iterator[FiniteSemigroup]:
    """All associative tables of order n, lexicographic; deduplicated modes
    yield canonical representatives in canonical table order."""
    bound = global_data.exhaustive_order_bound if bound is None else bound
    if dedup not in DEDUP_MODES:
        raise ValueError(f"Unknown dedup mode {dedup!r}; expected one of {DEDUP_MODES}")
    if not 1 <= n <= bound:
        raise ValueError(f"Exhaustive enumeration needs 1 <= n <= {bound}, got {n}")
    if dedup == 'none':
        yield from _labeled_semigroups(n)
        return
    include_anti = dedup == 'iso_and_anti'
    classes = {canonical_form(S, include_anti) for S in _labeled_semigroups(n)}
    logger.info(f"Order {n}: {len(classes)} classes under dedup={dedup}")
    yield from sorted(classes, key=lambda S: S.table)


def enumerate_semigroups_naive(n: int) -> Iterator[FiniteSemigroup]:
    """Full scan of all n^(n²) tables; an oracle for small n."""
    if not 1 <= n <= 3:
        raise ValueError(f"Naive scan is limited to 1 <= n <= 3, got {n}")
    for flat in product(range(n), repeat=n * n):
        T = np.array(flat, dtype=np.int64).reshape(n, n)
        if first_associativity_violation(T) is None:
            yield FiniteSemigroup(tuple(tuple(int(x) for x in row) for row in T))


def random_semigroups(n: int, count: int, seed: int = 0) -> List[FiniteSemigroup]:
    """Up to count distinct labelled tables from seeded randomized backtracking."""
    rng = random.Random(seed)
    found: Dict[Tuple, FiniteSemigroup] = {}
    attempts = 0
    while len(found) < count and attempts < count * 20:
        attempts += 1
        rows = next(_backtrack(n, lambda: rng.sample(range(n), n)))
        S = validate(rows)
        found.setdefault(S.table, S)
    if len(found) < count:
        logger.warning(f"random_semigroups: only {len(found)} of {count} distinct tables after {attempts} attempts")
    return list(found.values())


# ---------- cache ----------

@dataclass(frozen=True)
class EnumerationCache:
    n: int
    dedup: str
    tables: Tuple[FiniteSemigroup, ...]

    @property
    def count(self) -> int:
        return len(self.tables)

    def metadata(self) -> Dict:
        return {'n': self.n, 'dedup': self.dedup, 'count': self.count, 'version': CACHE_VERSION}


def cache_store(path: str, cache: EnumerationCache) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(f"semigroups {CACHE_VERSION} n={cache.n} dedup={cache.dedup}\n")
        for S in cache.tables:
            f.write(' '.join(str(x) for row in S.table for x in row) + '\n')
    logger.info(f"Stored {cache.count} tables of order {cache.n} ({cache.dedup}) in {path}")


def _parse_header(line: str) -> Tuple[int, str]:
    parts = line.split()
    if len(parts) != 4 or parts[0] != 'semigroups':
        raise CacheError(f"Not a semigroup cache header: {line.strip()!r}")
    if parts[1] != CACHE_VERSION:
        raise CacheVersionError(f"Cache version {parts[1]!r}, expected {CACHE_VERSION!r}")
    try:
        fields = dict(part.split('=', 1) for part in parts[2:])
        n, dedup = int(fields['n']), fields['dedup']
    except (ValueError, KeyError):
        raise CacheError(f"Malformed cache header: {line.strip()!r}")
    if dedup not in DEDUP_MODES or n < 1:
        raise CacheError(f"Malformed cache header: {line.strip()!r}")
    return n, dedup


def cache_load(path: str) -> EnumerationCache:
    with open(path, 'r', encoding='utf-8') as f:
        lines = [line for line in f if line.strip()]
    if not lines:
        raise CacheError(f"Empty cache file {path}")
    n, dedup = _parse_header(lines[0])

    tables = []
    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            flat = [int(x) for x in line.split()]
        except ValueError:
            raise CacheError(f"{path}:{lineno}: non-integer entry")
        if len(flat) != n * n:
            raise CacheError(f"{path}:{lineno}: expected {n * n} entries, got {len(flat)}")
        S = validate([flat[i * n:(i + 1) * n] for i in range(n)])
        if S.table in seen:
            raise CacheError(f"{path}:{lineno}: duplicate table")
        if dedup != 'none' and canonical_form(S, dedup == 'iso_and_anti') != S:
            raise CacheError(f"{path}:{lineno}: table is not in canonical form")
        seen.add(S.table)
        tables.append(S)
    return EnumerationCache(n, dedup, tuple(tables))


def cache_path(n: int, dedup: str, cache_dir: Optional[str] = None) -> str:
    cache_dir = global_data.cache_dir if cache_dir is None else cache_dir
    return os.path.join(cache_dir, f"semigroups_n{n}_{dedup}.txt")


def load_or_enumerate(n: int, dedup: str = 'iso', cache_dir: Optional[str] = None) -> List[FiniteSemigroup]:
    path = cache_path(n, dedup, cache_dir)
    if os.path.exists(path):
        try:
            cache = cache_load(path)
            if cache.n == n and cache.dedup == dedup:
                return list(cache.tables)
            logger.warning(f"Cache {path} holds n={cache.n} dedup={cache.dedup}; regenerating")
        except (CacheError, SemigroupError) as e:
            logger.warning(f"Ignoring unreadable cache {path}: {e}")

    tables = list(enumerate_semigroups(n, dedup))
    try:
        cache_store(path, EnumerationCache(n, dedup, tuple(tables)))
    except OSError as e:
        logger.error(f"Could not write cache {path}: {e}")
    return tables
