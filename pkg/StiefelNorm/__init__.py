'''
############
Introduction
############

In this package, we compute the normalizing constants of the matrix Bingham and the matrix Langevin distributions on the Stiefel manifold V_{d,p}, i.e.

* Phi_{d,p}(A,Sigma), the uniform average of exp(tr(A*x'*Sigma*x)), which equals the hypergeometric function 1F1(p/2;d/2;A,Sigma) of two matrix arguments, and
* Psi_{d,p}(B), the uniform average of exp(tr(B'x)), which equals 0F1(d/2;B'B/4).

Both are evaluated by their zonal polynomial series truncated at a degree m. The remainders beyond the truncation are bracketed by explicit upper and lower bounds whose upper parts decay in the dimension d, so that in high dimensions a few terms certify the constants to a prescribed tolerance. The engine-app framework of `Basics` drives the computations, and a Monte Carlo oracle together with an executable suite of the underlying inequalities cross-checks the results.

It works with python 3.8 or later, and requires several packages:

* numpy latest version
* scipy latest version
* mpmath latest version
* mpi4py (optional) for the parallel builds of the zonal tables, the inequality suite and the Monte Carlo oracle

###########
Subpackages
###########

===============   ==========================================================================
SUBPACKAGE        DESCRIPTION
===============   ==========================================================================
`Basics`          Errors, logging, timers, sheets and the engine-app framework
`Misc`            Dense symmetric linear algebra and reproducible random streams
`Zonal`           Partitions and exact zonal polynomials with their cache
`Series`          Truncated hypergeometric series of matrix argument
`Bounds`          Upper and lower bounds of the remainders and the reference remainders
`Verify`          Executable checks of the inequalities behind the bounds
`MonteCarlo`      Monte Carlo oracle under the uniform measure of the Stiefel manifold
`NormConst`       The engines of the matrix Bingham and the matrix Langevin constants
`Management`      The command line interface
===============   ==========================================================================

########
Contents
########

.. toctree::
   :numbered:
   :maxdepth: 4

   Basics/index
   Misc/index
   Zonal/index
   Series/index
   Bounds/index
   Verify/index
   MonteCarlo/index
   NormConst/index
   Management/index
'''
