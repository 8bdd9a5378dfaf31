"""SAPHIR content platform: authoring, translation, play, offline packs."""

__version__ = "0.1.0"
