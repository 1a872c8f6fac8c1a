"""Base class for seeded counterexample hunts."""
import concurrent.futures
import random
from abc import ABC, abstractmethod

from core.errors import InputError
from hunt.report import Candidate, HuntReport, instance_hash
from utils.data_processor import flagged_samples, samples_frame
from utils.progress import display_progress


class BaseHunt(ABC):
    """
    Draws instances, flags those that look like counterexamples and rechecks
    every flagged instance from its serialized text alone.

    Sample i is drawn from random.Random(seed + i), so the report depends only
    on (seed, parameters), never on worker scheduling.
    """

    def __init__(self, name, params):
        """Initialize the hunt with a name and its search parameters."""
        self.name = name
        self.params = dict(params)

    @abstractmethod
    def draw(self, rng):
        """Draw one instance from the hunt's distribution."""

    @abstractmethod
    def label(self, instance):
        """Short description used to group samples in the report."""

    @abstractmethod
    def order(self, instance):
        """Number of vertices of the instance."""

    @abstractmethod
    def is_candidate(self, instance):
        """True when the instance looks like a counterexample."""

    @abstractmethod
    def serialize(self, instance):
        """Self-contained text form of the instance."""

    @abstractmethod
    def recheck(self, text):
        """
        Re-derive the verdict from the serialized text by the brute-force path.

        Returns:
            bool: True when the counterexample is confirmed.
        """

    def evaluate(self, index, seed):
        """Draw and judge sample `index`; returns its row and, if flagged, its text."""
        sample_seed = seed + index
        instance = self.draw(random.Random(sample_seed))
        flagged = bool(self.is_candidate(instance))
        text = self.serialize(instance)
        row = {
            "index": index,
            "seed": sample_seed,
            "label": self.label(instance),
            "order": self.order(instance),
            "flagged": flagged,
            "instance_hash": instance_hash(text),
        }
        return row, (text if flagged else None)

    def run(self, budget, seed, use_concurrent=False, workers=1):
        """
        Evaluate `budget` samples and return the report.

        Args:
            budget (int): Number of samples, at least 1.
            seed (int): Base seed.
            use_concurrent (bool): Evaluate samples in a thread pool.
            workers (int): Pool size when use_concurrent is set.

        Returns:
            HuntReport: Report with confirmed candidates sorted by instance hash;
                flagged instances the recheck refuted are only counted.
        """
        if budget <= 0:
            raise InputError(f"budget must be positive, got {budget}")
        display_progress(f"Running {self.name} hunt: {budget} samples, seed {seed}")

        results = {}
        if use_concurrent and workers > 1:
            with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
                future_to_index = {
                    executor.submit(self.evaluate, index, seed): index for index in range(budget)
                }
                for future in concurrent.futures.as_completed(future_to_index):
                    results[future_to_index[future]] = future.result()
        else:
            for index in range(budget):
                results[index] = self.evaluate(index, seed)

        samples_df = samples_frame([results[i][0] for i in range(budget)])
        texts = {i: text for i, (_, text) in results.items() if text is not None}

        candidates = []
        rejected = 0
        for row in flagged_samples(samples_df).to_dict("records"):
            index = int(row["index"])
            text = texts[index]
            confirmed = bool(self.recheck(text))
            display_progress(f"Candidate {row['instance_hash']} at sample {index}: confirmed={confirmed}")
            if confirmed:
                candidates.append(Candidate(index, int(row["seed"]), row["instance_hash"], text, confirmed))
            else:
                rejected += 1

        params = dict(self.params, seed=seed, budget=budget)
        display_progress(f"{self.name} hunt done: {len(candidates)} candidates")
        return HuntReport(self.name, budget, params, candidates, rejected, samples_df)
