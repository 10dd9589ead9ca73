"""Weinstein handlebody diagrams for complements of partially smoothed toric divisors.

The pipeline: a Delzant polytope with a centered set of smoothed vertices
turns into slope curves on the torus, which are cut to an annular front,
satellited onto the Gompf diagram of T*T^2, and handed to the move engine
and the invariant calculators.
"""

__version__ = "0.1.0"
