import random

import pytest

from config.config import GENERATOR_MODELS
from config.settings import load_runtime
from core.errors import InputError
from utils.data_processor import SAMPLE_COLUMNS, flagged_samples, samples_frame, summarize_by
from utils.generators import generate, monochromatic_graph, rainbow_graph
from utils.progress import display_progress, set_verbose


def row(index, label, flagged, instance):
    return {"index": index, "seed": index, "label": label, "order": 4, "flagged": flagged, "instance_hash": instance}


class TestDataProcessor:
    def test_samples_sorted_by_index(self):
        df = samples_frame([row(2, "b", False, "x"), row(0, "a", True, "y")])
        assert list(df.columns) == SAMPLE_COLUMNS
        assert list(df["index"]) == [0, 2]

    def test_summarize_by_label(self):
        df = samples_frame([row(0, "n05", False, "x"), row(1, "n04", False, "y"), row(2, "n05", True, "z")])
        assert summarize_by(df) == {"n04": 1, "n05": 2}
        assert summarize_by(samples_frame([])) == {}

    def test_flagged_deduplicated_by_hash(self):
        df = samples_frame([row(0, "a", True, "bb"), row(1, "a", True, "aa"), row(2, "a", True, "bb"),
                            row(3, "a", False, "cc")])
        flagged = flagged_samples(df)
        assert list(flagged["instance_hash"]) == ["aa", "bb"]
        assert list(flagged["index"]) == [1, 0]


class TestGenerators:
    @pytest.mark.parametrize("model", GENERATOR_MODELS)
    def test_models_are_seeded(self, model):
        assert generate(model, 9, random.Random(5)) == generate(model, 9, random.Random(5))

    def test_rainbow_and_monochromatic(self):
        rainbow = rainbow_graph(8, random.Random(1), p=0.5)
        assert len(rainbow.palette()) == rainbow.m
        assert monochromatic_graph(8, random.Random(1), p=0.9).palette() <= frozenset({0})

    def test_proper_complete_shuffle_keeps_properness(self):
        graph = generate("proper-complete", 8, random.Random(3))
        assert graph.m == 28
        assert all(len({graph.color(v, u) for u in graph.neighbors(v)}) == 7 for v in graph.vertices())

    def test_unknown_model(self):
        with pytest.raises(InputError):
            generate("lattice", 5, random.Random(0))
        with pytest.raises(InputError):
            generate("uniform", 0, random.Random(0))


def test_progress_goes_to_stderr_when_verbose(capsys):
    set_verbose(True)
    try:
        display_progress("hello")
    finally:
        set_verbose(False)
    display_progress("quiet")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.endswith("] hello\n")
    assert "quiet" not in captured.err


class TestSettings:
    def test_defaults(self):
        assert load_runtime({}) == {"workers": 1, "verbose": False, "format": "text"}

    def test_values_are_read(self):
        env = {"HUNTER_WORKERS": "4", "HUNTER_VERBOSE": "yes", "HUNTER_FORMAT": "JSON"}
        assert load_runtime(env) == {"workers": 4, "verbose": True, "format": "json"}

    @pytest.mark.parametrize("env", [{"HUNTER_FORMAT": "xml"}, {"HUNTER_WORKERS": "many"}, {"HUNTER_WORKERS": "0"}])
    def test_bad_values_fall_back_with_a_warning(self, env, capsys):
        runtime = load_runtime(env)
        assert runtime["format"] == "text"
        assert runtime["workers"] == 1
        assert capsys.readouterr().err.startswith("warning: ignoring HUNTER_")
