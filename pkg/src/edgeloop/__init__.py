"""Desk-scale co-design loop: learned analog symbol coding over a fading
OFDM link feeding a delay-compensating driving agent, closed over a
deterministic 2-D world.

Subpackages/modules:

numerics   seeded streams, special functions, DFT helpers, autodiff tensors
kernels    compiled rollout kernels with a pure-numpy fallback
channel    multipath OFDM channel, frequency-domain abstraction, equalizer
jscc       symbol encoder, power projection, energy-based symbol selection
vib        Gaussian KL penalty, rate bound checks, joint objective
dtcp       two-branch prediction agent, command fusion, loss stack
env        2-D driving world, scripted expert, dataset generation, scoring
pipeline   time-slotted capture/transmit/predict/actuate loop
train      joint behavior-cloning trainer and checkpoints
harness    config, sweeps and the command-line interface
"""

__version__ = "0.1.0"
