'''
MonteCarlo test.
'''

from StiefelNorm.MonteCarlo.test import *
from unittest import TestSuite

montecarlo=TestSuite()
montecarlo.addTest(stiefelmc)
