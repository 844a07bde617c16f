"""Core errors, constants and random streams shared by every module."""
