# Walk a sequence through the IDS channel and inspect what happened.
#
# The channel visits each base and either transmits, substitutes, deletes,
# or inserts (re-visiting the base afterwards, so insertions can pile up).
# Every corruption returns an edit script that replays to the trace exactly.
import numpy as np

from trecon import ChannelParams, NoiseDistribution, corrupt, generate_cluster, sample_sequence

rng = np.random.default_rng(7)

x = sample_sequence(40, rng)
print("original:   ", x)

params = ChannelParams(p_i=0.08, p_d=0.08, p_s=0.05)
trace, script = corrupt(x, params, rng)
print("trace:      ", trace)
print("edit script:", script.to_compact())
print("replay ok:  ", script.replay(x) == trace)

# Expected trace length follows L * (1 - p_d) / (1 - p_i).
lengths = [len(corrupt(x, params, rng)[0]) for _ in range(20_000)]
expected = 40 * (1 - params.p_d) / (1 - params.p_i)
print(f"\nmean trace length {np.mean(lengths):.3f} vs closed form {expected:.3f}")

# A cluster bundles one ground truth with several traces drawn under one
# parameter draw; everything is reproducible from the seed alone.
cluster = generate_cluster(length=30, n_traces=(2, 10), dist=NoiseDistribution(), seed=123)
print(f"\ncluster with N={cluster.n} traces at params "
      f"({cluster.params.p_i:.3f}, {cluster.params.p_d:.3f}, {cluster.params.p_s:.3f})")
for t in cluster.traces:
    print("  ", t)
