"""
Unit tests for exactreal
"""
