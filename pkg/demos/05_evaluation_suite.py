"""The evaluation harness: reconstruction, control, cycle, and latent probes.

Runs against the checkpoint from demos/03_train_toy_model.py by default; the
numbers are weak at demo scale but exercise every metric. The same functions
back the `faderwave eval` command and the acceptance suite.
"""

import sys
from pathlib import Path

from faderwave.dataio import load_corpus
from faderwave.evaluation import (
    collect_latents,
    eval_control,
    eval_cycle,
    eval_reconstruction,
    full_report,
    probe_accuracy,
    write_report,
)
from faderwave.model import Synthesizer, load_checkpoint

CKPT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("demo_run/run/checkpoint_final.pt")
if not CKPT.exists():
    sys.exit(f"checkpoint {CKPT} not found - run demos/03_train_toy_model.py first")

payload = load_checkpoint(CKPT)
synth = Synthesizer(payload["model"], payload["quantizer"])
corpus = load_corpus(Path("demo_run/corpus"), seed=0)

# 1. Reconstruction quality on the held-out split. jnd_proxy is a log-mel L1
#    stand-in for a learned perceptual metric; the report says so explicitly.
recon = eval_reconstruction(synth, corpus, split="test")
print(f"reconstruction ({recon.metric_name}): proxy {recon.jnd_proxy:.3f}, "
      f"mel L1 {recon.mel_l1:.4f}, mstft {recon.mstft:.3f}")

# 2. Control accuracy: give each item another item's descriptor tracks and
#    check the output actually follows them (rank correlation per kind).
rho, l1 = eval_control(synth, corpus, split="test")
print(f"control: spearman {rho:.3f}, normalized L1 {l1:.3f}")

# 3. Cycle consistency: transform, re-encode, revert; compare to the source.
cycle = eval_cycle(synth, corpus, split="test")
print(f"cycle proxy {cycle:.3f} (vs direct {recon.jnd_proxy:.3f})")

# 4. Latent probe: can a small classifier read a descriptor back out of the
#    frozen latents? After adversarial training it should be near chance.
train_f, train_l = collect_latents(synth, corpus, "train", "rms")
test_f, test_l = collect_latents(synth, corpus, "test", "rms")
acc = probe_accuracy(train_f, train_l, test_f, test_l,
                     num_bins=synth.quantizer.num_bins)
print(f"rms probe accuracy {acc:.3f} "
      f"(chance {1 / synth.quantizer.num_bins:.3f})")

# 5. Bundle everything into the standard JSON + CSV report.
report = full_report(synth, corpus, split="test")
write_report(report, Path("demo_out") / "report.json",
             manifest={"checkpoint": str(CKPT), "split": "test"})
print("wrote demo_out/report.json and demo_out/report.csv")
