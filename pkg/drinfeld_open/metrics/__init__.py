from .tracker import SweepTracker

__all__ = ["SweepTracker"]
