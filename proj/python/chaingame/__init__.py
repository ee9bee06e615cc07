"""On-line chain partitions of semi-orders."""

import json

from ._chaingame import (
    ChainGameError,
    SemiOrder,
    exhaustive_adversary,
    floor_golden_fraction,
    game_value,
    max_x0,
    solve_ik,
)
from . import _chaingame

__all__ = [
    "ChainGameError",
    "SemiOrder",
    "exhaustive_adversary",
    "floor_golden_fraction",
    "game_value",
    "max_x0",
    "prooflab",
    "replay",
    "run_game",
    "solve_ik",
]


def run_game(w, mode="up_growing", spoiler="golden", algorithm="alg", seed=0, points=None):
    """Plays one game and returns the transcript as a dict."""
    config = {"mode": mode, "w": w, "spoiler": spoiler, "algorithm": algorithm, "seed": seed}
    if points is not None:
        config["points"] = points
    return json.loads(_chaingame.run_game_json(json.dumps(config)))


def _text(transcript):
    return transcript if isinstance(transcript, str) else json.dumps(transcript)


def replay(transcript):
    """Referee verdict for a transcript (dict or JSON text)."""
    return json.loads(_chaingame.replay_json(_text(transcript)))


def prooflab(transcript):
    """Layers, alternating paths and check reports for an up-growing game."""
    return json.loads(_chaingame.prooflab_json(_text(transcript)))
