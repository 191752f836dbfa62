"""
Exact arithmetic over Q and Q(sqrt(d)), sparse polynomials and ideals.
"""
