"""Shared scaffolding for the demo scripts.

Every demo runs offline against the deterministic stub providers, so the
corpora here are synthetic: each topic is a fixed eight-word stem that the
hashed bag-of-words embedding maps to a tight direction of its own.
"""

from datetime import datetime, timedelta, timezone
from pathlib import Path

import numpy as np

from storylines.ingest import ingest_corpus, write_units
from storylines.synthetic import topic_corpus
from storylines.workspace import Workspace, WorkspaceConfig

EPOCH = datetime(2023, 1, 2, tzinfo=timezone.utc)
OUT = Path(__file__).parent / "out"


def demo_workspace(name, topics, days=4, posts_per_day=6, channels=("chA", "chB"),
                   seed=99, keep=None, **cfg_kw):
    """Fresh workspace under demos/out/<name> with an ingested topic corpus.

    keep, when given, filters the raw posts before ingest (e.g. to delay a
    topic's first appearance by a day).
    """
    root = OUT / name
    if root.exists():
        import shutil

        shutil.rmtree(root)
    cfg = WorkspaceConfig(start="2023-01-02T00:00:00Z", window_days=1,
                          dim=256, rng_seed=3, **cfg_kw)
    ws = Workspace.create(root, cfg)
    rng = np.random.default_rng(seed)
    posts = topic_corpus(rng, topics, posts_per_topic_per_day=posts_per_day,
                         days=days, channels=list(channels), start=EPOCH)
    if keep is not None:
        posts = [p for p in posts if keep(p)]
    units = ingest_corpus(posts, EPOCH, timedelta(days=1))
    write_units(units, ws.units_file())
    return ws, units


def day_of(post):
    return (post.timestamp - EPOCH).days


def banner(title):
    print(f"\n{'=' * 66}\n{title}\n{'=' * 66}")
