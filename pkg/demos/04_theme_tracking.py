"""Track what a narrative is about, and how that changes month to month.

A flood story runs through January as a rescue operation; from late January
a rebuilding story takes over and runs through February. Both phases join
one curated narrative. Theme classification then shows coverage, a per-day
series for one theme, and the January -> February dominant-theme handoff.
"""

from storylines.pipeline import run_pipeline
from storylines.providers import StubClassifierProvider, StubGeneratorProvider
from storylines.themes import (
    Theme,
    ThemeDictionary,
    classify_units,
    dominant_theme_flow,
    propose_themes,
    tcs,
    theme_series,
)

from _support import banner, day_of, demo_workspace

SHARED = "flood river crews night shelter warning".split()
RESCUE = ("resc", SHARED + ["rescue", "boats"])
REBUILD = ("rebu", SHARED + ["repairs", "funding"])

RESCUE_DAYS = range(0, 30)    # all of January
REBUILD_DAYS = range(24, 56)  # late January through February


def keep(post):
    day = day_of(post)
    if "rescue" in post.text:
        return day in RESCUE_DAYS
    return day in REBUILD_DAYS


def main():
    ws, units = demo_workspace(
        "theme_tracking", topics=[RESCUE, REBUILD], days=56, posts_per_day=3,
        band=(0.5, 0.9), attach_threshold=0.5, keep=keep,
    )
    text_of = {u.unit_id: u.text for u in units}
    unit_map = {u.unit_id: u for u in units}

    run_pipeline(ws, to_timestep=0)
    state = ws.load_state(0)
    seed = state.unit_cluster[next(u.unit_id for u in units
                                   if "rescue" in u.text)]
    ws.add_narrative("flood", "flood story", initial_seed=seed, created_at=0,
                     band=(0.5, 0.9), attach_threshold=0.5)
    run_pipeline(ws)
    state = ws.load_state()

    narrative = ws.rebuild_narrative(state, "flood")
    [cand] = narrative.pending()
    banner("Review")
    print(f"rebuilding cluster {cand.cluster_id} entered the band on day "
          f"{cand.discovered_at}; approving")
    ws.append_decision("flood", cand.cluster_id, "approved", "demo",
                       at=cand.discovered_at)
    narrative = ws.rebuild_narrative(state, "flood")

    banner("Proposed themes (generation stub)")
    proposed = propose_themes(
        StubGeneratorProvider(), narrative, state, t=55,
        existing=ThemeDictionary(themes=()), texts=text_of, generation_run=1)
    print("labels:", ", ".join(proposed.labels()))

    # a hand dictionary keeps the analytics below easy to read
    dictionary = ThemeDictionary(themes=(
        Theme("rescue boats", "people pulled from the water", 0),
        Theme("repairs funding", "money and rebuilding work", 24),
    ))
    provider = StubClassifierProvider()
    assignments = classify_units(provider, units, dictionary)

    banner("Coverage")
    print(f"theme coverage score: "
          f"{tcs(dictionary, list(assignments.values())):.3f} "
          f"(every unit matches one phase exactly)")

    series = theme_series(narrative, state, dictionary, assignments,
                          unit_map, "rescue boats")
    banner("'rescue boats' share of the narrative, selected days")
    for t in (0, 10, 24, 29, 40, 55):
        count, share = series.by_timestep.get(t, (0, 0.0))
        print(f"  day {t:>2}: {count:>2} units, {share:>5.0%} of narrative")

    flow = dominant_theme_flow(narrative, state, dictionary, assignments,
                               unit_map)
    banner("Dominant themes by month")
    for period in flow.periods:
        tops = ["cluster {} ({} units: {})".format(cid, pop, ", ".join(labels))
                for cid, pop, labels in period.clusters]
        print(f"  {period.period}: " + "; ".join(tops))
    top_theme = {p.period: p.clusters[0][2][0] for p in flow.periods}
    months = [p.period for p in flow.periods]
    print(f"  narrative-level dominant theme: "
          + " -> ".join(f"'{top_theme[m]}' ({m})" for m in months))
    for tr in flow.transitions:
        verb = "keeps" if tr.source_theme == tr.target_theme else "shifts to"
        print(f"  cluster-level, {tr.from_period} -> {tr.to_period}: "
              f"'{tr.source_theme}' {verb} '{tr.target_theme}' "
              f"({tr.cluster_count} cluster)")


if __name__ == "__main__":
    main()
