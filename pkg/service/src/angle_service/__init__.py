"""Backward mask-fill HTTP service producing joke angles."""

__version__ = "0.1.0"

from .app import create_app
from .fill import FillState, fill_angle, is_punctuation
from .models import MaskPredictor, ScriptedPredictor, TransformersPredictor, load_predictor
