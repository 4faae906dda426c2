'''
Zonal test.
'''

from StiefelNorm.Zonal.test import *
from unittest import TestSuite

zonalall=TestSuite()
zonalall.addTest(partition)
zonalall.addTest(zonal)
