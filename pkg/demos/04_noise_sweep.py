# Reconstruction quality under rising noise.
#
# Error probabilities are drawn from [0.01 + 0.01k, 0.10 + 0.01k]; level
# k=0 is the base distribution. Every algorithm degrades monotonically as
# k grows; decoders that model the channel degrade more gracefully. This is
# a desk-scale rendition of the sweep the CLI runs with `trecon sweep`.
import numpy as np

from trecon import NoiseDistribution, evaluate
from trecon.channel import derive_cluster_seed, generate_cluster

ALGORITHMS = ("bma", "bmala", "vs", "trellis-bma")
LEVELS = (0, 2, 4, 6, 8, 10)
COUNT = 150

curves = {name: [] for name in ALGORITHMS}
for level in LEVELS:
    clusters = [
        generate_cluster(
            60, (2, 10), NoiseDistribution(level=level), derive_cluster_seed(55, i)
        )
        for i in range(COUNT)
    ]
    for name in ALGORITHMS:
        report = evaluate(name, clusters, group_by=(), k=level)
        curves[name].append(report.rows[0].mean_dl)

header = "level:" + "".join(f"{k:>8d}" for k in LEVELS)
print(header)
for name, values in curves.items():
    print(f"{name:>12s}" + "".join(f"{v:8.3f}" for v in values))

print("\nmonotone non-decreasing per algorithm:",
      all(all(np.diff(v) >= 0) for v in curves.values()))
