'''
Management test.
'''

from StiefelNorm.Management.test import *
from unittest import TestSuite

managementall=TestSuite()
managementall.addTest(management)
