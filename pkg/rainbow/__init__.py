"""
Rainbow cycle detection.

This package contains the pruned C3/C4 detectors and the brute-force oracle.
"""
from rainbow.detector import RainbowWitness, find_rainbow_c3, find_rainbow_c4, is_rainbow, make_witness
from rainbow.oracle import oracle_rainbow_ck
