"""
Runner tests package.
"""
