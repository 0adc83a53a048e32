import os
import json
import logging
import logging.handlers
from typing import List, Tuple, Iterable

import global_data
from global_data import config


def setup_logging():
    logger = logging.getLogger('semifuzz')
    logger.setLevel(logging.DEBUG)
    logger.handlers = []

    log_cfg = config['logging']
    os.makedirs(global_data.log_dir, exist_ok=True)
    formatter = logging.Formatter('%(asctime)s - %(levelname)s - %(message)s', datefmt='%Y-%m-%d %H:%M:%S')

    # Console handler (WARNING+)
    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging.WARNING)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    # semifuzz.log (INFO+)
    main_handler = logging.handlers.RotatingFileHandler(
        os.path.join(global_data.log_dir, 'semifuzz.log'),
        maxBytes=log_cfg['main_max_bytes'],
        backupCount=log_cfg['main_backups'],
        encoding='utf-8'
    )
    main_handler.setLevel(logging.INFO)
    main_handler.setFormatter(formatter)
    logger.addHandler(main_handler)

    # error.log (WARNING+)
    error_handler = logging.handlers.RotatingFileHandler(
        os.path.join(global_data.log_dir, 'error.log'),
        maxBytes=log_cfg['error_max_bytes'],
        backupCount=log_cfg['error_backups'],
        encoding='utf-8'
    )
    error_handler.setLevel(logging.WARNING)
    error_handler.setFormatter(formatter)
    logger.addHandler(error_handler)

    # debug.log (DEBUG)
    debug_handler = logging.handlers.RotatingFileHandler(
        os.path.join(global_data.log_dir, 'debug.log'),
        maxBytes=log_cfg['debug_max_bytes'],
        backupCount=log_cfg['debug_backups'],
        encoding='utf-8'
    )
    debug_handler.setLevel(logging.DEBUG)
    debug_handler.setFormatter(formatter)
    logger.addHandler(debug_handler)

    logger.debug("Logging setup complete")
    return logger


# Initialize logger
logger = setup_logging()


# ---------- Cayley table text ----------

def parse_table_text(text: str) -> List[List[int]]:
    """Parse a Cayley table from either JSON (a list of rows) or the plain
    format: first line n, then n lines of n space-separated indices.

    Only the shape is checked here; range and associativity belong to
    semigroup_core.validate.
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("Empty table text")
    if stripped[0] in '[{':
        data = json.loads(stripped)
        if isinstance(data, dict):
            data = data.get('table')
        if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
            raise ValueError("JSON table must be a list of rows")
        return [[int(x) for x in row] for row in data]

    lines = [line.split() for line in stripped.splitlines() if line.strip()]
    try:
        n = int(lines[0][0])
        rows = [[int(x) for x in line] for line in lines[1:]]
    except (ValueError, IndexError) as e:
        raise ValueError(f"Malformed table text: {e}")
    if len(lines[0]) != 1 or len(rows) != n:
        raise ValueError(f"Header says n={lines[0][0]} but found {len(rows)} rows")
    return rows


def format_table(table: Iterable[Iterable[int]]) -> str:
    rows = [list(row) for row in table]
    return '\n'.join([str(len(rows))] + [' '.join(str(x) for x in row) for row in rows]) + '\n'


def read_table_file(path: str) -> List[List[int]]:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_table_text(f.read())


# ---------- Fuzzy subset text ----------

def parse_fuzzy_text(text: str) -> Tuple[int, List[int]]:
    # "k; v0 v1 ... v_{n-1}"
    try:
        head, body = text.split(';', 1)
        return int(head.strip()), [int(v) for v in body.split()]
    except ValueError as e:
        raise ValueError(f"Malformed fuzzy subset text {text!r}: {e}")


def format_fuzzy(k: int, values: Iterable[int]) -> str:
    return f"{k}; " + ' '.join(str(v) for v in values)


def format_subset(subset: Iterable[int]) -> List[int]:
    return sorted(int(x) for x in subset)


def write_json(path: str, payload) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write('\n')
