"""Exact computations for moduli of rank-2 bundles on curves and K3 surfaces of genus 13.

Submodules:
    series     truncated Laurent series and residues
    newstead   intersection numbers and Riemann-Roch on the moduli space N
    mukai      Mukai lattice and Riemann-Roch on the K3 surface
    liealg     root systems, Weyl dimension formula, Borel-Weil-Bott
    schurrep   Littlewood-Richardson, Freudenthal and Klimyk decompositions
    bundlecoh  homogeneous bundle expressions, cohomology, Koszul pages
    quadrics   pencils of quadrics and the divisor lattice
    tables     fixture tables and their checker
    verify     the full verification run
    cli        command line interface
"""

__version__ = "0.1.0"
