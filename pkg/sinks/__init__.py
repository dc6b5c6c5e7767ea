"""Verdict sinks package."""
