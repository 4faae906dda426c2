'''
Utilities test (6 tests in total).
'''

__all__=['utilities']

from StiefelNorm.Basics.Utilities import *
from unittest import TestCase,TestLoader,TestSuite
from collections import OrderedDict
from time import sleep
import numpy as np

class TestTimers(TestCase):
    def setUp(self):
        self.nrecord=2
        self.keys=['Preparation','Summation']
        self.timers=Timers(*self.keys)

    def test_timers(self):
        print()
        for _ in range(self.nrecord):
            for key in self.keys:
                with self.timers.get(key): sleep(0.01)
            self.timers.record()
        print('%s\n'%self.timers)
        for key in self.keys: self.assertGreater(self.timers.time(key),0.0)

class TestSheet(TestCase):
    def setUp(self):
        self.info=Sheet(rows=('value','upper','lower'),cols=('phi',))
        self.info['value']=1.2660658777520082
        self.info['upper']=0.13
        self.info['lower']=0.0123

    def test_sheet(self):
        print()
        print(self.info)
        self.assertEqual(self.info['upper'],0.13)
        self.assertEqual(self.info.shape,(3,1))

class Test_mpirun(TestCase):
    def test_mpirun(self):
        result=mpirun(lambda n,m: n*m,[(i,i+1) for i in range(5)])
        self.assertEqual(result,[0,2,6,12,20])

class TestErrors(TestCase):
    def test_hierarchy(self):
        self.assertTrue(issubclass(InputError,ValueError))
        self.assertTrue(issubclass(DomainError,StiefelNormError))
        self.assertTrue(issubclass(ResourceError,RuntimeError))

class TestFormat(TestCase):
    def test_floattostr(self):
        for x in (np.pi,1e-300,-2.5e17,0.1):
            self.assertEqual(float(floattostr(x)),x)
        self.assertEqual(floattostr(None),'')
        self.assertEqual(decimaltostr(0.5000,3),'0.5')

    def test_confighash(self):
        a=confighash(OrderedDict([('d',4),('p',2)]))
        b=confighash(OrderedDict([('p',2),('d',4)]))
        self.assertEqual(a,b)
        self.assertEqual(len(a),16)
        self.assertNotEqual(a,confighash({'d':4,'p':1}))

utilities=TestSuite([
                    TestLoader().loadTestsFromTestCase(TestTimers),
                    TestLoader().loadTestsFromTestCase(TestSheet),
                    TestLoader().loadTestsFromTestCase(Test_mpirun),
                    TestLoader().loadTestsFromTestCase(TestErrors),
                    TestLoader().loadTestsFromTestCase(TestFormat),
                    ])
