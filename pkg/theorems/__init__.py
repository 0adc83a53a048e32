from typing import Optional

import global_data
from fuzzy_core import ValueChain
from semigroup_core import FiniteSemigroup


def chain_for(S: FiniteSemigroup, k: Optional[int] = None) -> ValueChain:
    """Explicit k, else the configured chain_k, else |S|."""
    if k is None:
        k = global_data.chain_k
    return ValueChain(k if k is not None else S.order)
