"""Figure rendering and delimited summaries for quivers and reports.

Drawings go through matplotlib with the Agg backend so they work
headless; every drawing has a text twin in tab-separated form, and the
report-producing commands write both next to each other.
"""

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def label_text(label):
    if isinstance(label, tuple):
        return ",".join(str(x) for x in label)
    return str(label)


def circle_positions(quiver):
    """Unit-circle layout by vertex id, for quivers without geometry."""
    n = max(quiver.q, 1)
    out = {}
    for v in range(quiver.q):
        angle = 2.0 * math.pi * v / n
        out[v] = (math.cos(angle), math.sin(angle))
    return out


def weight_positions(quiver, m, l):
    """Barycentric layout for weight-labeled vertices on the m-gon."""
    pts = {}
    for p in range(1, m + 1):
        angle = 2.0 * math.pi * (p - 1) / m
        pts[p] = (math.cos(angle), math.sin(angle))
    out = {}
    for v, lab in enumerate(quiver.labels):
        x = y = 0.0
        for i in range(0, len(lab), 2):
            x += lab[i + 1] * pts[lab[i]][0]
            y += lab[i + 1] * pts[lab[i]][1]
        out[v] = (x / l, y / l)
    return out


def draw_quiver(quiver, positions, path, title=None):
    """Draw one quiver: squares frozen, circles mutable, labeled arrows."""
    fig, ax = plt.subplots(figsize=(7, 7))
    for v in range(quiver.q):
        x, y = positions[v]
        marker = "s" if quiver.frozen[v] else "o"
        color = "#9ecae1" if quiver.frozen[v] else "#fdd0a2"
        ax.scatter([x], [y], s=700, marker=marker, c=color,
                   edgecolors="black", zorder=3)
        ax.text(x, y, label_text(quiver.labels[v]), fontsize=7,
                ha="center", va="center", zorder=4)
    for u in range(quiver.q):
        for v in range(quiver.q):
            mult = quiver.adj[u][v]
            if mult <= 0:
                continue
            x0, y0 = positions[u]
            x1, y1 = positions[v]
            ax.annotate(
                "",
                xy=(x1, y1),
                xytext=(x0, y0),
                arrowprops={
                    "arrowstyle": "-|>",
                    "color": "#555555",
                    "shrinkA": 16,
                    "shrinkB": 16,
                },
                zorder=2,
            )
            if mult > 1:
                ax.text(
                    (x0 + x1) / 2.0,
                    (y0 + y1) / 2.0,
                    str(mult),
                    fontsize=8,
                    color="#b30000",
                    ha="center",
                    va="center",
                    zorder=4,
                )
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def draw_pipeline(report, path):
    """Bar chart of the deletion steps: length, mode, and rank flags."""
    steps = report.steps
    fig, ax = plt.subplots(figsize=(max(6, len(steps) * 0.7), 4))
    xs = list(range(1, len(steps) + 1))
    heights = [len(s.sequence) for s in steps]
    colors = ["#74c476" if s.mode == "sink" else "#fd8d3c" for s in steps]
    ax.bar(xs, heights, color=colors, edgecolor="black")
    for x, step in zip(xs, steps):
        flag = "ok" if step.full_rank else "rank!"
        ax.text(x, len(step.sequence) + 0.1, flag, ha="center", fontsize=7)
    ax.set_xticks(xs)
    ax.set_xticklabels([label_text(s.vertex) for s in steps],
                       rotation=60, fontsize=7, ha="right")
    ax.set_ylabel("mutations before deletion")
    ax.set_title(
        "deletion pipeline m=%d l=%d (green sink, orange source)"
        % (report.m, report.l)
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def draw_outcomes(rows, path, title):
    """Pass/fail strip for a list of (case, ok) pairs."""
    fig, ax = plt.subplots(figsize=(max(6, len(rows) * 0.45), 2.5))
    for i, (case, ok) in enumerate(rows):
        ax.bar([i], [1], color="#74c476" if ok else "#de2d26",
               edgecolor="black")
    ax.set_xticks(range(len(rows)))
    ax.set_xticklabels([case for case, _ in rows], rotation=60,
                       fontsize=7, ha="right")
    ax.set_yticks([])
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def quiver_tsv(quiver):
    """One row per vertex: id, label, kind, degrees, sink/source flags."""
    lines = ["id\tlabel\tfrozen\tin\tout\tsink\tsource"]
    for v in range(quiver.q):
        into = sum(max(quiver.adj[u][v], 0) for u in range(quiver.q))
        out = sum(max(quiver.adj[v][u], 0) for u in range(quiver.q))
        lines.append(
            "%d\t%s\t%d\t%d\t%d\t%d\t%d"
            % (
                v,
                label_text(quiver.labels[v]),
                int(quiver.frozen[v]),
                into,
                out,
                int(quiver.is_sink(v)),
                int(quiver.is_source(v)),
            )
        )
    return "\n".join(lines) + "\n"


def pipeline_tsv(report):
    """One row per deletion step plus a terminal summary row."""
    lines = ["step\tvertex\tmode\tmutations\tfull_rank\tsequence"]
    for i, step in enumerate(report.steps, start=1):
        lines.append(
            "%d\t%s\t%s\t%d\t%d\t%s"
            % (
                i,
                label_text(step.vertex),
                step.mode,
                len(step.sequence),
                int(step.full_rank),
                ";".join(label_text(v) for v in step.sequence),
            )
        )
    lines.append(
        "terminal\t%s\t-\t-\t%d\t-"
        % (
            "match" if report.terminal_matches else "MISMATCH",
            int(report.start_full_rank),
        )
    )
    return "\n".join(lines) + "\n"


def outcomes_tsv(rows):
    """One row per verification case."""
    lines = ["case\tok"]
    for case, ok in rows:
        lines.append("%s\t%d" % (case, int(ok)))
    return "\n".join(lines) + "\n"
