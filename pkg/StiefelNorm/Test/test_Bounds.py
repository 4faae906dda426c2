'''
Bounds test.
'''

from StiefelNorm.Bounds.test import *
from unittest import TestSuite

boundsall=TestSuite()
boundsall.addTest(bounds)
boundsall.addTest(reference)
