'''
Basics test.
'''

from StiefelNorm.Basics.test import *
from unittest import TestSuite

basics=TestSuite()
basics.addTest(utilities)
basics.addTest(engineapp)
