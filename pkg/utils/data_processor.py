"""Data processing utilities for hunt samples."""
import pandas as pd

SAMPLE_COLUMNS = ["index", "seed", "label", "order", "flagged", "instance_hash"]


def samples_frame(rows):
    """
    Build the per-sample table of a hunt.

    Args:
        rows (list): Dicts with the SAMPLE_COLUMNS keys, in any order.

    Returns:
        pd.DataFrame: Samples sorted by index.
    """
    if not rows:
        return pd.DataFrame(columns=SAMPLE_COLUMNS)
    df = pd.DataFrame(rows, columns=SAMPLE_COLUMNS)
    return df.sort_values("index").reset_index(drop=True)


def summarize_by(samples_df, column="label"):
    """Count samples per value of a column, keys in sorted order."""
    if samples_df.empty:
        return {}
    counts = samples_df[column].value_counts().sort_index()
    return {str(key): int(count) for key, count in counts.items()}


def flagged_samples(samples_df):
    """
    Flagged samples with repeated instances removed, ordered by instance hash.

    Returns:
        pd.DataFrame: One row per distinct flagged instance.
    """
    if samples_df.empty:
        return samples_df
    flagged = samples_df[samples_df["flagged"].astype(bool)]
    flagged = flagged.drop_duplicates(subset=["instance_hash"], keep="first")
    return flagged.sort_values(["instance_hash", "index"]).reset_index(drop=True)
