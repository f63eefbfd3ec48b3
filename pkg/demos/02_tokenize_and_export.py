# From clusters to next-token-prediction text.
#
# A prompt concatenates the traces with | and ends with :, the target is the
# ground truth (or, in MSA mode, the gapped alignment rows ending with #).
import numpy as np

from trecon import NoiseDistribution, generate_cluster
from trecon.align import ground_truth_alignment
from trecon.dataset import (
    Vocabulary,
    encode_msa_instance,
    encode_prompt,
    encode_training_instance,
    subcluster_split,
)

cluster = generate_cluster(length=16, n_traces=3, dist=NoiseDistribution(), seed=99)

print("prompt:  ", encode_prompt(cluster.traces))
instance = encode_training_instance(cluster)
print("instance:", instance.text)

vocab = Vocabulary.msa()
ids = vocab.encode(instance.text)
print("token ids:", ids[:20], "...")
print("round trip ok:", vocab.decode(ids) == instance.text)

# The exact alignment is known synthetically, so the MSA-target variant can
# place gap tokens where deletions happened.
alignment = ground_truth_alignment(cluster)
print("\nalignment rows:")
for row in alignment.rows:
    print("  ", row)
print("msa instance:", encode_msa_instance(cluster, alignment).text)

# Real clusters can exceed the context window; subcluster splitting breaks
# them into prompt-sized pieces without reusing traces.
big = generate_cluster(length=16, n_traces=23, dist=NoiseDistribution(), seed=5)
parts = subcluster_split(big, np.random.default_rng(0))
print("\nsubcluster sizes from a 23-trace cluster:", [p.n for p in parts])
