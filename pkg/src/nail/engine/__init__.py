"""Mock interactive-fiction engine driven by declarative JSON game files."""
from nail.engine.spec import (
    DIRECTIONS, Exit, GameFormatError, GameSpec, GameValidationError, ObjectSpec,
    PromptSpec, RoomSpec, bundled_game, bundled_games_dir, load_game, load_game_file,
)
from nail.engine.world import (
    PITCH_BLACK, RESTART_QUESTION, GameState, GroundTruth, Observation, describe_room,
    introspect, reset, step,
)

__all__ = [
    "DIRECTIONS", "Exit", "GameFormatError", "GameSpec", "GameValidationError", "ObjectSpec",
    "PromptSpec", "RoomSpec", "bundled_game", "bundled_games_dir", "load_game", "load_game_file",
    "PITCH_BLACK", "RESTART_QUESTION", "GameState", "GroundTruth", "Observation",
    "describe_room", "introspect", "reset", "step",
]
