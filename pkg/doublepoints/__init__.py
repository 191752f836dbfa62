"""
Exact classification of double points of plane curves, and the singularity
census of rational plane curves through their X_2 schemes.
"""

__version__ = '0.1.0'
