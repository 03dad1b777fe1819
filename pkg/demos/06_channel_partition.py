"""Split a channel reference graph into camps from a handful of seeds.

Forty channels forward each other's posts: two dense communities with a
few cross-forwards between them. Labeling two channels per side by hand
and propagating is enough to partition the rest; an audit sample per camp
gives a reviewer something concrete to spot-check.
"""

from datetime import timedelta

import numpy as np

from storylines.graph import (
    build_reference_graph,
    partition_sample,
    propagate_labels,
)
from storylines.ingest import RawPost

from _support import EPOCH, banner

rng = np.random.default_rng(31)
CAMPS = {
    "union": [f"union{i:02d}" for i in range(20)],
    "guild": [f"guild{i:02d}" for i in range(20)],
}

posts, serial = [], 0
for camp, members in CAMPS.items():
    for channel in members:
        # each channel forwards a few posts from its own camp ...
        for _ in range(4):
            src = members[int(rng.integers(len(members)))]
            if src == channel:
                continue
            posts.append(RawPost(
                post_id=f"f{serial:04d}", channel_id=channel, author_id=None,
                timestamp=EPOCH + timedelta(minutes=serial),
                text="fwd", forwarded_from=src))
            serial += 1
    # ... and the camp as a whole leaks two forwards across the aisle
    other = CAMPS["guild" if camp == "union" else "union"]
    for _ in range(2):
        posts.append(RawPost(
            post_id=f"f{serial:04d}",
            channel_id=members[int(rng.integers(len(members)))],
            author_id=None, timestamp=EPOCH + timedelta(minutes=serial),
            text="fwd", forwarded_from=other[int(rng.integers(len(other)))]))
        serial += 1

graph = build_reference_graph(posts)
seeds = {"union00": "union", "union07": "union",
         "guild03": "guild", "guild11": "guild"}
partition = propagate_labels(graph, seeds, rng_seed=0)

banner("Propagation result")
for label in ("union", "guild"):
    members = sorted(p.channel_id for p in partition.values()
                     if p.label == label)
    correct = sum(1 for m in members if m.startswith(label))
    print(f"{label:>6}: {len(members)} channels, {correct} actually "
          f"from that camp")
unlabeled = [p.channel_id for p in partition.values() if p.label is None]
print(f"unlabeled: {unlabeled or 'none'}")

banner("Audit sample")
for label in ("union", "guild"):
    sample, exhausted = partition_sample(partition, label, n=5, rng_seed=0)
    note = " (entire class)" if exhausted else ""
    print(f"{label:>6}: {', '.join(sample)}{note}")
