"""
Registered estimators for the ``estimate`` commands.
"""
