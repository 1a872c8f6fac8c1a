# utils/__init__.py
"""
Utilities package for RainbowHunter.

This package contains progress output, random instance generators and the
pandas helpers used to tabulate hunt samples.
"""
from utils.data_processor import flagged_samples, samples_frame, summarize_by
from utils.generators import generate, proper_complete_graph, round_robin_coloring
from utils.progress import display_progress, set_verbose
