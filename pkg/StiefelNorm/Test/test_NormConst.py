'''
NormConst test.
'''

from StiefelNorm.NormConst.test import *
from unittest import TestSuite

normconstall=TestSuite()
normconstall.addTest(normconst)
