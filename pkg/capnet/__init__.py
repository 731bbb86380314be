"""capnet: global congestion avoidance routing."""

__version__ = "0.1.0"
