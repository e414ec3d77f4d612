"""Matplotlib rendering for bench reports (imported lazily by the CLI)."""

from __future__ import annotations

from .primes import BenchReport


def save_bench_figure(report: BenchReport, path: str) -> str:
    """Write a two-panel naive-vs-wheel comparison figure to ``path``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax_time, ax_flags) = plt.subplots(1, 2, figsize=(8.0, 3.5))
    labels = ["naive", "wheel"]
    colors = ["#9a9a9a", "#2a6fbb"]

    ax_time.bar(labels, [report.naive_seconds, report.wheel_seconds], color=colors)
    ax_time.set_ylabel("seconds")
    ax_time.set_title(f"sieve time to {report.limit:,}")

    ax_flags.bar(labels, [report.naive_candidates, report.wheel_candidates], color=colors)
    ax_flags.set_ylabel("candidate flags")
    ax_flags.set_title(f"flags (ratio {report.candidate_ratio:.3f})")

    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
