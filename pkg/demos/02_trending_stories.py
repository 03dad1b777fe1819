"""Spot the story that suddenly accelerated.

Three stories tick along for two days; on day two one of them quintuples
its inflow. Ranking by inflow delta puts the burst on top, while ranking
by raw size would keep pointing at the biggest old story.
"""

import numpy as np

from storylines.clustering import ClusterState, incremental_fit
from storylines.synthetic import ComponentSpec, separated_means, stream_batches
from storylines.trends import sample_cluster, top_trending

from _support import banner

rng = np.random.default_rng(7)
means = separated_means(rng, 3, 16)
specs = [
    ComponentSpec(mean=means[0], kappa=350.0, counts=[40, 40, 40]),  # big, steady
    ComponentSpec(mean=means[1], kappa=350.0, counts=[20, 20, 20]),
    ComponentSpec(mean=means[2], kappa=350.0, counts=[8, 8, 40]),    # burst
]
batches, truth = stream_batches(specs, rng)

state = ClusterState(similarity_threshold=0.85, rng_seed=5)
for batch in batches:
    incremental_fit(state, batch)

burst_unit = next(u.unit.unit_id for u in batches[2] if truth[u.unit.unit_id] == 2)
burst_cluster = state.unit_cluster[burst_unit]

banner("Trend ranking at day 2 (inflow delta)")
print(f"{'rank':>5} {'cluster':>8} {'delta':>6} {'growth':>7} {'size':>6}")
for rec in top_trending(state, 2):
    size = state.clusters[rec.cluster_id].size_history[2]
    tag = "  <- injected burst" if rec.cluster_id == burst_cluster else ""
    print(f"{rec.rank:>5} {rec.cluster_id:>8} {rec.delta:>6} "
          f"{rec.growth:>7} {size:>6}{tag}")

by_size = sorted((c for c in state.clusters.values() if 2 in c.size_history),
                 key=lambda c: -c.size_history[2])
print(f"\nLargest cluster by size: {by_size[0].cluster_id} "
      f"(the steady old story, not the burst)")

banner("Audit sample from the burst cluster")
for uid in sample_cluster(state, burst_cluster, 2, n_near=5, n_random=3):
    print(f"  {uid}")
