'''
Series test.
'''

from StiefelNorm.Series.test import *
from unittest import TestSuite

seriesall=TestSuite()
seriesall.addTest(series)
