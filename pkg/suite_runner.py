import concurrent.futures
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import global_data
from enumeration import (
    enumerate_semigroups, load_or_enumerate, catalog, parse_catalog_spec, random_semigroups, DEDUP_MODES,
)
from report import SuiteReport, TheoremVerdict, error_verdict, write_report
from semigroup_core import BudgetExceeded, FiniteSemigroup, validate
from theorems import chain_for
from theorems.properties import verify_bijection_theorem, verify_collapse, verify_fuzzy_laws
from theorems.regularity import verify_9_3_crisp, verify_lemma_comp, verify_osreg
from theorems.saito import verify_completely_regular_fuzzy, verify_saito, verify_saito_fuzzy
from utils import logger, read_table_file

# theorem id -> verifier(S, chain)
VERIFIERS: Dict[str, Callable] = {
    '9_3': lambda S, chain: verify_9_3_crisp(S),
    'osreg': verify_osreg,
    'lemma_comp': lambda S, chain: verify_lemma_comp(S),
    'saito': lambda S, chain: verify_saito(S),
    'saito_fuzzy': verify_saito_fuzzy,
    'completely_regular': verify_completely_regular_fuzzy,
    'bijections': verify_bijection_theorem,
    'fuzzy_laws': verify_fuzzy_laws,
    'collapse': verify_collapse,
}

CHAINLESS = {'9_3', 'lemma_comp', 'saito'}


@dataclass
class CorpusItem:
    source: str
    semigroup: Optional[FiniteSemigroup] = None
    error: Optional[str] = None


def _corpus_part(part: str, use_cache: bool) -> List[CorpusItem]:
    kind, _, rest = part.partition(':')
    if kind not in ('enumerate', 'catalog', 'random'):
        path = rest if kind == 'file' else part
        try:
            return [CorpusItem(f"file:{path}", validate(read_table_file(path)))]
        except (ValueError, OSError) as e:
            logger.warning(f"Corpus file {path} rejected: {e}")
            return [CorpusItem(f"file:{path}", error=str(e))]

    try:
        if kind == 'enumerate':
            fields = rest.split(':')
            n = int(fields[0])
            dedup = fields[1] if len(fields) > 1 else 'iso'
            if dedup not in DEDUP_MODES:
                raise ValueError(f"Unknown dedup mode {dedup!r}; expected one of {DEDUP_MODES}")
            tables = load_or_enumerate(n, dedup) if use_cache else list(enumerate_semigroups(n, dedup))
            return [CorpusItem(f"enumerate:{n}:{dedup}#{i}", S) for i, S in enumerate(tables)]
        if kind == 'catalog':
            spec = parse_catalog_spec(rest)
            return [CorpusItem(f"catalog:{spec}", catalog(spec))]
        fields = [int(x) for x in rest.split(':')]
        if len(fields) not in (2, 3):
            raise ValueError(f"expected random:n:count[:seed], got {part!r}")
        n, count, seed = (fields + [0])[:3]
        return [CorpusItem(f"random:{n}:{count}:{seed}#{i}", S) for i, S in enumerate(random_semigroups(n, count, seed))]
    except (ValueError, BudgetExceeded, OSError) as e:
        logger.warning(f"Corpus part {part!r} rejected: {e}")
        return [CorpusItem(part, error=str(e))]


def parse_corpus(spec: str, use_cache: bool = True) -> List[CorpusItem]:
    """Comma-separated parts: enumerate:N[:dedup], catalog:name:p[:q], random:n:count[:seed], file:path."""
    items = []
    for part in (p.strip() for p in spec.split(',')):
        if part:
            items.extend(_corpus_part(part, use_cache))
    logger.info(f"Corpus {spec!r}: {len(items)} items")
    return items


def run_item(item: CorpusItem, theorem: str, chain_k: Optional[int]) -> TheoremVerdict:
    start = time.time()
    S = item.semigroup
    chain = None
    try:
        chain = None if theorem in CHAINLESS else chain_for(S, chain_k)
        verdict = VERIFIERS[theorem](S, chain)
    except (ValueError, BudgetExceeded, OSError) as e:
        logger.warning(f"{theorem} on {item.source}: {e}")
        verdict = error_verdict(theorem, item.source, str(e), S, chain)
    except AssertionError as e:
        logger.error(f"{theorem} on {item.source} broke an internal invariant: {e}")
        verdict = error_verdict(theorem, item.source, f"internal invariant: {e}", S, chain)
        verdict.error = None
        verdict.side_checks = {'internal_invariants': False}
    verdict.source = item.source
    verdict.millis = int((time.time() - start) * 1000)
    return verdict


def run_suite(corpus: str, chain_k: Optional[int] = None, theorems: Optional[Sequence[str]] = None,
              out_path: Optional[str] = None, max_workers: Optional[int] = None,
              use_cache: bool = True) -> SuiteReport:
    theorems = list(global_data.default_theorems if theorems is None else theorems)
    unknown = [t for t in theorems if t not in VERIFIERS]
    if unknown:
        raise ValueError(f"Unknown theorem ids {unknown}; expected some of {sorted(VERIFIERS)}")
    max_workers = global_data.max_workers if max_workers is None else max_workers

    logger.info(f"Suite started: corpus={corpus!r} k={chain_k} theorems={theorems}")
    report = SuiteReport(corpus=corpus, chain_k=chain_k)
    items = parse_corpus(corpus, use_cache)
    for item in items:
        if item.error is not None:
            report.items.append(error_verdict('validate', item.source, item.error))

    valid = [item for item in items if item.error is None]
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = [executor.submit(run_item, item, theorem, chain_k) for item in valid for theorem in theorems]
        for future in concurrent.futures.as_completed(futures):
            report.items.append(future.result())

    report.finish()
    summary = report.summary()
    logger.info(f"Suite finished in {summary['millis']}ms: {summary['passed']} passed, "
                f"{summary['failed']} failed, {summary['errors']} errors")
    if out_path:
        write_report(out_path, report)
    return report
