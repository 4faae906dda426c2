from setuptools import setup

setup(
    name='StiefelNorm',
    version='1.0.0',
    description='Certified normalizing constants of the matrix Bingham and Langevin distributions on the Stiefel manifold',
    packages=[
        'StiefelNorm',
        'StiefelNorm.Basics','StiefelNorm.Basics.test',
        'StiefelNorm.Misc','StiefelNorm.Misc.test',
        'StiefelNorm.Zonal','StiefelNorm.Zonal.test',
        'StiefelNorm.Series','StiefelNorm.Series.test',
        'StiefelNorm.Bounds','StiefelNorm.Bounds.test',
        'StiefelNorm.Verify','StiefelNorm.Verify.test',
        'StiefelNorm.MonteCarlo','StiefelNorm.MonteCarlo.test',
        'StiefelNorm.NormConst','StiefelNorm.NormConst.test',
        'StiefelNorm.Management','StiefelNorm.Management.test',
        'StiefelNorm.Test',
        ],
    python_requires='>=3.8',
    install_requires=['numpy','scipy','mpmath'],
    extras_require={'mpi':['mpi4py']},
    entry_points={'console_scripts':['stiefelnorm=StiefelNorm.Management:main']},
    )
