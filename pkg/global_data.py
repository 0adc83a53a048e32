import json
import os

# Load config (next to this module unless SEMIFUZZ_CONFIG points elsewhere)
CONFIG_FILE = os.environ.get(
    'SEMIFUZZ_CONFIG',
    os.path.join(os.path.dirname(os.path.abspath(__file__)), 'config.json')
)

with open(CONFIG_FILE, 'r') as f:
    config = json.load(f)

chain_k = config['defaults']['chain_k']  # None -> k = |S|
subset_order_bound = config['defaults']['subset_order_bound']  # 2^n subset scans
canonical_order_bound = config['defaults']['canonical_order_bound']  # n! permutation scans
exhaustive_order_bound = config['defaults']['exhaustive_order_bound']  # backtracking enumeration
partition_order_bound = config['defaults']['partition_order_bound']  # Bell(n) partition scans
fuzzy_budget = config['defaults']['fuzzy_budget']  # (k+1)^n level assignments
region_budget = config['defaults']['region_budget']  # subsets of S x chain
collapse_max_index = config['defaults']['collapse_max_index']  # |Y| for collapse sweeps
collapse_max_host = config['defaults']['collapse_max_host']  # host order for collapse sweeps
left_inverse_budget = config['defaults']['left_inverse_budget']  # 2^|S x chain| subsets for the Ψ̃ sweep
max_workers = config['defaults']['max_workers']
log_dir = config['logging']['dir']
default_theorems = config['suite']['theorems']
cache_dir = config['suite']['cache_dir']
