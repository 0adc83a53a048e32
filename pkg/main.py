import argparse
import sys

import global_data
from correspondence import RegionError, condition_report, graph_region, region_to_fuzzy, verify_bijections
from enumeration import (
    DEDUP_MODES, EnumerationCache, cache_store, catalog, CatalogSpec, CatalogError, enumerate_semigroups,
)
from fuzzy_core import (
    FUZZY_FILTERS, is_completely_simple_fuzzy_subsemigroup, is_left_simple_fuzzy_subsemigroup,
    parse_fuzzy_subset,
)
from semigroup_core import (
    AssociativityError, BudgetExceeded, SemigroupError, is_completely_regular, is_completely_simple,
    is_ideal, is_left_ideal, is_left_regular, is_left_simple, is_quasi_ideal, is_regular, is_right_ideal,
    is_semilattice, is_simple, is_subsemigroup, semilattice_decomposition, validate,
)
from suite_runner import VERIFIERS, run_suite
from theorems import chain_for
from utils import logger, format_subset, format_table, read_table_file

SEMIGROUP_CHECKS = {
    'regular': is_regular,
    'left_regular': is_left_regular,
    'completely_regular': is_completely_regular,
    'left_simple': is_left_simple,
    'simple': is_simple,
    'completely_simple': is_completely_simple,
    'semilattice': is_semilattice,
}

SUBSET_CHECKS = {
    'subsemigroup': is_subsemigroup,
    'left_ideal': is_left_ideal,
    'right_ideal': is_right_ideal,
    'ideal': is_ideal,
    'quasi_ideal': is_quasi_ideal,
}

FUZZY_CHECKS = {f'fuzzy_{name}': predicate for name, predicate in FUZZY_FILTERS.items() if predicate}
FUZZY_CHECKS['fuzzy_left_simple'] = is_left_simple_fuzzy_subsemigroup
FUZZY_CHECKS['fuzzy_completely_simple'] = is_completely_simple_fuzzy_subsemigroup


def _load(path):
    return validate(read_table_file(path))


def cmd_validate(args) -> int:
    try:
        S = _load(args.table)
    except AssociativityError as e:
        print(f"invalid: {e}")
        return 1
    print(f"ok: semigroup of order {S.order}")
    return 0


def cmd_enumerate(args) -> int:
    tables = list(enumerate_semigroups(args.order, args.dedup))
    if args.out:
        cache_store(args.out, EnumerationCache(args.order, args.dedup, tuple(tables)))
    if args.show:
        for S in tables:
            print(format_table(S.table))
    print(f"{len(tables)} semigroups of order {args.order} (dedup={args.dedup})")
    return 0


def cmd_catalog(args) -> int:
    S = catalog(CatalogSpec(args.name, tuple(args.params)))
    print(format_table(S.table), end='')
    return 0


def cmd_check(args) -> int:
    S = _load(args.table)
    if args.predicate in SEMIGROUP_CHECKS:
        result = SEMIGROUP_CHECKS[args.predicate](S)
    elif args.predicate in SUBSET_CHECKS:
        if args.subset is None:
            raise SemigroupError(f"{args.predicate} needs --subset")
        result = SUBSET_CHECKS[args.predicate](S, [int(x) for x in args.subset.split(',') if x.strip()])
    else:
        if args.fuzzy is None:
            raise SemigroupError(f"{args.predicate} needs --fuzzy")
        result = FUZZY_CHECKS[args.predicate](parse_fuzzy_subset(S, args.fuzzy))
    print(str(result).lower())
    return 0


def cmd_correspond(args) -> int:
    S = _load(args.table)
    if args.fuzzy:
        f = parse_fuzzy_subset(S, args.fuzzy)
        region = graph_region(f)
        print(f"region: {region}")
        for kind in ('s', 'l', 'r', 'q'):
            print(f"{kind}-conditions: {condition_report(region, kind)}")
        try:
            print(f"round trip: {region_to_fuzzy(region)}")
        except RegionError:
            print("round trip: not a subsemigroup")
        return 0

    failed = False
    for family, result in verify_bijections(S, chain_for(S, args.chain), args.budget).items():
        print(f"{family}: {result.fuzzy_count} fuzzy, {result.region_count} regions, bijective={result.holds}")
        if result.witness:
            print(f"  witness: {result.witness}")
        failed |= not result.holds
    return 1 if failed else 0


def cmd_decompose(args) -> int:
    S = _load(args.table)
    d = semilattice_decomposition(S)
    print(f"index semilattice:\n{format_table(d.index.table)}", end='')
    for alpha, block in enumerate(d.blocks):
        print(f"block {alpha}: {format_subset(block)} left_simple={d.left_simple[alpha]} "
              f"completely_simple={d.completely_simple[alpha]}")
    return 0


def cmd_verify(args) -> int:
    theorems = args.theorems.split(',') if args.theorems else None
    report = run_suite(args.corpus, args.chain, theorems, args.out, use_cache=not args.no_cache)
    summary = report.summary()
    print(f"{summary['items']} verdicts: {summary['passed']} passed, {summary['failed']} failed, "
          f"{summary['errors']} errors in {summary['millis']}ms")
    for item in report.items:
        if item.status != 'passed':
            print(f"  {item.status}: {item.theorem} on {item.source}: {item.error or item.witness}")
    return report.exit_code()


def _add_budget(parser) -> None:
    # SUPPRESS keeps a --budget given before the subcommand
    parser.add_argument('--budget', type=int, default=argparse.SUPPRESS, help="override enumeration budgets for this run")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='semifuzz', description="Finite semigroup and fuzzy subsemigroup workbench")
    parser.add_argument('--budget', type=int, default=None, help="override enumeration budgets for this run")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('validate', help="check a Cayley table file")
    p.add_argument('table')
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser('enumerate', help="enumerate semigroups of a given order")
    p.add_argument('--order', type=int, required=True)
    p.add_argument('--dedup', choices=DEDUP_MODES, default='iso')
    p.add_argument('--out', help="write an enumeration cache file")
    p.add_argument('--show', action='store_true', help="print every table")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser('catalog', help="print a catalog semigroup")
    p.add_argument('name')
    p.add_argument('params', type=int, nargs='+')
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser('check', help="evaluate one predicate")
    p.add_argument('predicate', choices=sorted({**SEMIGROUP_CHECKS, **SUBSET_CHECKS, **FUZZY_CHECKS}))
    p.add_argument('table')
    p.add_argument('--subset', help="comma-separated element indices")
    p.add_argument('--fuzzy', help="fuzzy subset as 'k; v0 v1 ...'")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser('correspond', help="fuzzy subsets versus regions of S × chain")
    p.add_argument('table')
    p.add_argument('--fuzzy', help="map one fuzzy subset instead of sweeping")
    p.add_argument('--chain', type=int, default=None)
    _add_budget(p)
    p.set_defaults(func=cmd_correspond)

    p = sub.add_parser('decompose', help="semilattice decomposition along the least semilattice congruence")
    p.add_argument('table')
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser('verify', help="run theorem suites over a corpus")
    p.add_argument('--corpus', required=True,
                   help="comma-separated: enumerate:N[:dedup], catalog:name:p[:q], random:n:count[:seed], file:path")
    p.add_argument('--chain', type=int, default=None, help="chain resolution k (default |S|)")
    p.add_argument('--theorems', help=f"comma-separated subset of {','.join(VERIFIERS)}")
    p.add_argument('--out', help="JSON report path; a CSV summary is written next to it")
    p.add_argument('--no-cache', action='store_true')
    _add_budget(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    """Exit codes: 0 all passed, 1 some check failed, 2 invalid input or budget refusal."""
    args = build_parser().parse_args(argv)
    saved = global_data.fuzzy_budget, global_data.region_budget
    if args.budget is not None:
        global_data.fuzzy_budget = global_data.region_budget = args.budget
    try:
        return args.func(args)
    except (SemigroupError, BudgetExceeded, CatalogError, ValueError, OSError) as e:
        logger.warning(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2
    finally:
        global_data.fuzzy_budget, global_data.region_budget = saved


if __name__ == '__main__':
    sys.exit(main())
