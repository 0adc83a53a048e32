"""
Verdicts, suite reports and their JSON / CSV forms.
"""
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from enumeration import semigroup_hash
from utils import logger, format_subset, write_json


@dataclass
class TheoremVerdict:
    theorem: str
    semigroup_hash: Optional[str]
    chain_k: Optional[int]
    conditions: Dict[str, bool] = field(default_factory=dict)
    side_checks: Dict[str, bool] = field(default_factory=dict)
    counterexamples: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None
    error: Optional[str] = None
    source: Optional[str] = None
    table: Optional[List[List[int]]] = None
    millis: int = 0

    @property
    def equivalent(self) -> bool:
        return len(set(self.conditions.values())) <= 1

    @property
    def passed(self) -> bool:
        return self.error is None and self.equivalent and all(self.side_checks.values())

    @property
    def status(self) -> str:
        if self.error is not None:
            return 'error'
        return 'passed' if self.passed else 'failed'

    def sort_key(self):
        return (self.semigroup_hash or '', self.theorem, self.table or [], self.source or '')

    def to_dict(self) -> Dict[str, Any]:
        out = {
            'theorem': self.theorem,
            'semigroup_hash': self.semigroup_hash,
            'chain_k': self.chain_k,
            'conditions': dict(self.conditions),
            'side_checks': dict(self.side_checks),
            'counterexamples': self.counterexamples,
            'equivalent': self.equivalent,
            'passed': self.passed,
            'millis': self.millis,
        }
        if self.table is not None:
            out['table'] = self.table
        if self.source is not None:
            out['source'] = self.source
        if self.witness is not None:
            out['witness'] = self.witness
        if self.error is not None:
            out['error'] = self.error
        return out


def make_verdict(theorem: str, S, chain, conditions: Dict[str, bool],
                 side_checks: Optional[Dict[str, bool]] = None,
                 counterexamples: Optional[Dict[str, Any]] = None) -> TheoremVerdict:
    """Build a verdict; the witness is filled in only when it failed."""
    verdict = TheoremVerdict(
        theorem=theorem,
        semigroup_hash=semigroup_hash(S),
        chain_k=chain.k if chain is not None else None,
        conditions={name: bool(v) for name, v in conditions.items()},
        side_checks={name: bool(v) for name, v in (side_checks or {}).items()},
        counterexamples=counterexamples or {},
        table=[list(row) for row in S.table],
    )
    if not verdict.passed:
        verdict.witness = {
            'false_conditions': sorted(name for name, v in verdict.conditions.items() if not v),
            'failed_side_checks': sorted(name for name, v in verdict.side_checks.items() if not v),
            'counterexamples': verdict.counterexamples,
        }
        logger.error(f"{theorem} failed on {verdict.semigroup_hash}: {verdict.witness}")
    return verdict


def error_verdict(theorem: str, source: str, message: str, S=None, chain=None) -> TheoremVerdict:
    verdict = TheoremVerdict(theorem=theorem, semigroup_hash=None, chain_k=chain.k if chain else None,
                             error=message, source=source)
    if S is not None:
        verdict.table = [list(row) for row in S.table]
        verdict.semigroup_hash = semigroup_hash(S)
    verdict.witness = {'error': message}
    return verdict


def subset_witness(*subsets) -> List[List[int]]:
    return [format_subset(A) for A in subsets]


@dataclass
class SuiteReport:
    corpus: str
    chain_k: Optional[int]
    items: List[TheoremVerdict] = field(default_factory=list)
    started: float = field(default_factory=time.time)
    runtime_millis: int = 0

    def finish(self) -> None:
        self.items.sort(key=TheoremVerdict.sort_key)
        self.runtime_millis = int((time.time() - self.started) * 1000)

    def summary(self) -> Dict[str, int]:
        statuses = [item.status for item in self.items]
        return {
            'items': len(statuses),
            'passed': statuses.count('passed'),
            'failed': statuses.count('failed'),
            'errors': statuses.count('error'),
            'millis': self.runtime_millis,
        }

    def exit_code(self) -> int:
        summary = self.summary()
        if summary['failed']:
            return 1
        if summary['errors']:
            return 2
        return 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'corpus': self.corpus,
            'chain_k': self.chain_k,
            'items': [item.to_dict() for item in self.items],
            'summary': self.summary(),
        }


def summary_frame(report: SuiteReport) -> pd.DataFrame:
    """Per theorem: items, passed, failed, errors."""
    columns = ['theorem', 'items', 'passed', 'failed', 'errors']
    if not report.items:
        return pd.DataFrame(columns=columns)
    df = pd.DataFrame([{'theorem': item.theorem, 'status': item.status} for item in report.items])
    counts = pd.crosstab(df['theorem'], df['status'])
    for status in ('passed', 'failed', 'error'):
        if status not in counts:
            counts[status] = 0
    counts['items'] = counts[['passed', 'failed', 'error']].sum(axis=1)
    counts = counts.rename(columns={'error': 'errors'}).reset_index()
    return counts[columns].sort_values('theorem').reset_index(drop=True)


def write_report(path: str, report: SuiteReport) -> None:
    write_json(path, report.to_dict())
    csv_path = (path[:-5] if path.endswith('.json') else path) + '.csv'
    summary_frame(report).to_csv(csv_path, index=False)
    summary = report.summary()
    logger.info(f"Report written to {path} ({summary['passed']} passed, {summary['failed']} failed, "
                f"{summary['errors']} errors)")
