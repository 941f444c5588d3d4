"""Steer a trained model: knob-style edits and timbre transfer.

Runs against the checkpoint written by demos/03_train_toy_model.py (run that
first). For convincing audible control, substitute an acceptance-scale
checkpoint, e.g. runs/acceptance/fader/checkpoint_final.pt.
"""

import sys
from pathlib import Path

import numpy as np

from faderwave.audio import save_wav
from faderwave.evaluation import timbre_transfer
from faderwave.model import Synthesizer, load_checkpoint

CKPT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("demo_run/run/checkpoint_final.pt")
if not CKPT.exists():
    sys.exit(f"checkpoint {CKPT} not found - run demos/03_train_toy_model.py first")

OUT = Path("demo_out")
OUT.mkdir(exist_ok=True)

payload = load_checkpoint(CKPT)
synth = Synthesizer(payload["model"], payload["quantizer"])
print(f"model kinds: {synth.cfg.kinds}, latent dim {synth.cfg.latent_dim}")

# 1. Pick two sounds from the demo corpus.
corpus_dir = Path("demo_run/corpus")
from faderwave.dataio import load_corpus  # noqa: E402

corpus = load_corpus(corpus_dir, seed=0)
a = corpus.load_item(corpus.items[0])
b = corpus.load_item(corpus.items[1])

# 2. Plain reconstruction.
recon = synth.reconstruct(a)
save_wav(OUT / "reconstruction.wav", recon)

# 3. Knob-style edit: keep the latent trajectory, flatten the loudness track
#    to a constant and sweep the brightness from dark to bright.
z = synth.encode(a, deterministic=True)
attrs = synth.attributes_for(a, z.num_frames)
kinds = list(synth.cfg.kinds)
lo = synth.model.attr_min.numpy()
hi = synth.model.attr_max.numpy()

edited = attrs.copy()
edited[kinds.index("rms")] = 0.5 * (lo[kinds.index("rms")] + hi[kinds.index("rms")])
edited[kinds.index("centroid")] = np.linspace(
    lo[kinds.index("centroid")], hi[kinds.index("centroid")], z.num_frames
)
swept = synth.decode(z.mean, edited)
save_wav(OUT / "brightness_sweep.wav", swept)

measured = synth.attributes_for(swept, z.num_frames)
print("brightness sweep, measured centroid: "
      f"{measured[kinds.index('centroid')][0]:.0f} Hz -> "
      f"{measured[kinds.index('centroid')][-1]:.0f} Hz")

# 4. Timbre transfer: sound A's latent trajectory driven by sound B's
#    descriptor tracks.
hybrid = timbre_transfer(synth, x_timbre=a, x_attrs=b)
save_wav(OUT / "timbre_transfer.wav", hybrid)
print(f"wrote {OUT / 'reconstruction.wav'}, {OUT / 'brightness_sweep.wav'}, "
      f"{OUT / 'timbre_transfer.wav'}")
