"""
Solendim Utils Tests
"""
