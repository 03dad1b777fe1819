"""Curate a narrative around a seed story with human review decisions.

Day 0 has two unrelated stories: a harbor fire and a rail strike. Day 1
brings a follow-up story sharing most of the fire vocabulary (ferry delays
caused by the fire). The follow-up lands inside the review band, so it is
queued for a human decision; approving it makes it a seed, which moves the
narrative centroid from then on.
"""

from storylines.clustering import centroid_at
from storylines.narratives import (
    attach_clusters,
    enqueue_candidates,
    init_narrative,
    record_decision,
    review_sample,
)
from storylines.pipeline import run_pipeline

from _support import banner, day_of, demo_workspace

FIRE = ("fire", "harbor fire crews smoke wharf night alarm blaze".split())
FOLLOWUP = ("ferry", "harbor fire crews smoke wharf night ferry delays".split())
STRIKE = ("strike", "rail strike union talks depot platform morning picket".split())


def main():
    ws, units = demo_workspace(
        "narrative_review",
        topics=[FIRE, STRIKE, FOLLOWUP],
        days=2,
        band=(0.5, 0.9),
        attach_threshold=0.5,
        # the follow-up story only starts on day 1
        keep=lambda p: "ferry" not in p.text or day_of(p) >= 1,
    )
    run_pipeline(ws)
    state = ws.load_state()
    text_of = {u.unit_id: u.text for u in units}

    fire_unit = next(u for u in units if "blaze" in u.text and u.timestep == 0)
    seed = state.unit_cluster[fire_unit.unit_id]
    narrative = init_narrative("harbor fire", state, seed, band=(0.5, 0.9),
                               attach_threshold=0.5, narrative_id="fire", t=0)

    banner("Day 0: narrative seeded")
    enqueue_candidates(narrative, state, 0)
    attach_clusters(narrative, state, 0)
    print(f"seed cluster {seed}, attached: {sorted(narrative.attached[0])}, "
          f"pending reviews: {len(narrative.pending())}")

    banner("Day 1: a candidate enters the review band")
    enqueue_candidates(narrative, state, 1)
    pending = narrative.pending()
    for cand in pending:
        print(f"cluster {cand.cluster_id} at frontier similarity "
              f"{cand.similarity_to_frontier:.3f}; sample:")
        for uid in review_sample(narrative, state, cand.cluster_id, n=3):
            print(f"    {text_of[uid][:64]}")

    record_decision(narrative, pending[0].cluster_id, "approved",
                    reviewer="demo", at=1)
    print(f"\napproved cluster {pending[0].cluster_id}")
    attach_clusters(narrative, state, 1)
    print(f"attached day 1: {sorted(narrative.attached[1])} "
          f"(strike cluster stays out)")

    banner("Centroid trajectory")
    c0, c1 = narrative.centroid_history[0], narrative.centroid_history[1]
    seed_c0 = centroid_at(state.clusters[seed], 0)
    print(f"day-0 centroid is exactly the seed centroid: "
          f"{c0.tobytes() == seed_c0.tobytes()}")
    print(f"cos(centroid day 0, centroid day 1) = {float(c0 @ c1):.4f} "
          f"(pulled by the newly approved seed)")


if __name__ == "__main__":
    main()
