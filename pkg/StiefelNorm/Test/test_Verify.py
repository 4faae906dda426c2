'''
Verify test.
'''

from StiefelNorm.Verify.test import *
from unittest import TestSuite

verifyall=TestSuite()
verifyall.addTest(verify)
