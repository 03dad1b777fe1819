"""Watch story clusters form and grow over a simulated two-week stream.

Four fixed directions on the unit sphere stand in for four ongoing stories.
Each day delivers a fresh batch of points around those directions; the
engine absorbs what it recognizes and opens clusters for what it does not.
"""

import numpy as np

from storylines.clustering import ClusterState, incremental_fit
from storylines.synthetic import ComponentSpec, separated_means, stream_batches

from _support import banner

DAYS = 14

rng = np.random.default_rng(2023)
means = separated_means(rng, 4, 16)
specs = [ComponentSpec(mean=m, kappa=350.0, counts=[60] * DAYS) for m in means]
batches, truth = stream_batches(specs, rng)

state = ClusterState(similarity_threshold=0.85, rng_seed=1)

banner("Daily stream")
print(f"{'day':>4} {'batch':>6} {'absorbed':>9} {'new clusters':>13} {'active':>7}")
for t, batch in enumerate(batches):
    before = set(state.clusters)
    incremental_fit(state, batch)
    absorbed = len(state.absorption_log.get(t, []))
    opened = len(set(state.clusters) - before)
    print(f"{t:>4} {len(batch):>6} {absorbed:>9} {opened:>13} "
          f"{len(state.active_ids()):>7}")

banner("Final clusters")
print(f"{'cluster':>8} {'born':>5} {'size':>6}  steady inflow?")
for cid in state.active_ids():
    c = state.clusters[cid]
    inflows = [c.inflow_history.get(t, 0) for t in range(DAYS)]
    steady = max(inflows[1:]) - min(inflows[1:]) <= 10
    print(f"{cid:>8} {c.born_at:>5} {c.n_members:>6}  "
          f"{'yes' if steady else 'no'} {inflows}")

# every generating component should map onto exactly one engine cluster
by_comp: dict[int, set[int]] = {}
for uid, comp in truth.items():
    by_comp.setdefault(comp, set()).add(state.unit_cluster[uid])
pure = all(len(cids) == 1 for cids in by_comp.values())
print(f"\nEach component maps to exactly one cluster: {pure}")
