"""Regenerate fixtures/k2_nc_separating.json.

Runs the dual-subset search on the genus-two fixture until it meets a
noncontractible separating Hamiltonian cycle, then checks the hit directly.
"""

import json
import time
from pathlib import Path

from polyham.audit import load_fixture
from polyham.search import SearchRequest, subset_search
from polyham.topology import CycleClass

OUT = Path(__file__).resolve().parents[1] / "src" / "polyham" / "fixtures" / "k2_nc_separating.json"
BUDGET = 600

k = load_fixture("k2.map")
t0 = time.perf_counter()
req = SearchRequest(target_class="nc-separating", first=True, algorithm="dual-subset")
hit = next(subset_search(k, req, force=True))
elapsed = time.perf_counter() - t0
assert hit.consistent and hit.cycle.is_hamiltonian(k) and hit.cycle_class is CycleClass.NC_SEPARATING

OUT.write_text(json.dumps({
    "schema": 1,
    "map": "k2.map",
    "cycle": list(hit.cycle.vertices),
    "class": str(hit.cycle_class),
    "proper_type": str(hit.proper_verdict.verdict),
    "regions": hit.regions,
    "method": "dual-subset search, first noncontractible separating hit",
    "time_budget_seconds": BUDGET,
    "elapsed_seconds": round(elapsed, 2),
}, indent=2) + "\n")
print(OUT, f"{elapsed:.2f}s")
