'''
Misc test.
'''

from StiefelNorm.Misc.test import *
from unittest import TestSuite

misc=TestSuite()
misc.addTest(linalg)
misc.addTest(randomstream)
