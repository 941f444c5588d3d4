"""Train a miniature model end to end on a synthetic corpus.

This uses a deliberately tiny configuration so the demo finishes in a couple
of minutes on a laptop CPU; expect the reconstruction loss to fall but not a
musically useful model. The acceptance-scale recipe lives in
tests/accept_support.py, and the full-size defaults in TrainConfig().
"""

from pathlib import Path

from faderwave.dataio import make_toy_corpus
from faderwave.model import ModelConfig
from faderwave.training import TrainConfig, Trainer

OUT = Path("demo_run")

# 1. A seeded corpus of harmonic tones with moving loudness and brightness.
corpus = make_toy_corpus(16, OUT / "corpus", seed=0, chunk_length=16384)
print(f"corpus: {len(corpus.items)} items, "
      f"{len(corpus.split('train'))} train / {len(corpus.split('valid'))} valid / "
      f"{len(corpus.split('test'))} test")

# 2. A small two-stage configuration. Stage 1 learns the variational
#    autoencoder with the adversarial confusion term on the latents;
#    stage 2 freezes the encoder and sharpens the decoder with a GAN.
cfg = TrainConfig(
    batch_size=4,
    stage1_steps=150,
    stage2_steps=30,
    beta_warmup=(20, 60),     # KL weight ramps to 0.1
    lambda_warmup=(60, 120),  # confusion weight ramps to 0.5
    chunk_length=8192,
    num_bins=8,
    kinds=("rms", "centroid"),
    checkpoint_interval=100,
    log_interval=10,
    model=ModelConfig(
        num_bands=8,
        pqmf_taps_per_band=16,
        latent_dim=8,
        encoder_ratios=(4, 4, 4),
        encoder_channels=(16, 32, 64),
    ),
)

# 3. Train. Progress shows the loss mix shifting as the warmups engage.
trainer = Trainer(cfg, corpus, OUT / "run")


def progress(step, stage, report):
    if step % 25 == 0:
        print(f"stage {stage} step {step:4d}: recon {report.recon:7.3f} "
              f"kl {report.kl:6.3f} beta {report.beta:.3f} lambda {report.lam:.3f}")


final = trainer.train(progress=progress)
print(f"final checkpoint: {final}")
print(f"metrics log:      {OUT / 'run' / 'metrics.csv'}")
print("next: demos/04_control_and_transfer.py reuses this checkpoint")
