"""Weight lattice A_n*, its permutohedral Voronoi cell, and Coxeter-plane tilings."""

__version__ = "0.1.0"
