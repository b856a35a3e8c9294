"""Pydantic models for lab configuration and reports."""
