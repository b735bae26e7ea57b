"""Lower central series of GGS-groups and their congruence quotients."""

__version__ = "0.1.0"
