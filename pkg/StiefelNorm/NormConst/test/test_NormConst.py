'''
NormConst test (9 tests in total).
'''

__all__=['normconst']

import math
import numpy as np
from StiefelNorm.Basics import InputError,DomainError
from StiefelNorm.NormConst import *
from unittest import TestCase,TestLoader,TestSuite

I01=1.2660658777520082

class TestBingham(TestCase):
    def test_exponential(self):
        print()
        engine=Bingham([[1.0]],[[1.0]],m=2,name='exp')
        report=engine.register(APPROX(name='APPROX',reference=True,run=BinghamAPPROX))
        self.assertEqual(report.value,2.0)
        self.assertAlmostEqual(report.remainder_lower,math.e-2,places=12)
        self.assertAlmostEqual(report.extras['reference'],math.e-2,delta=report.extras['reference_radius']+1e-12)
        self.assertGreaterEqual(report.remainder_upper_series,math.e-2)
        self.assertEqual(engine.parameters['gamma0'],1.0)

    def test_approx(self):
        engine=Bingham(np.diag([1.0,0.5]),np.diag([0.6,0.4,0.2]),m=3,name='bingham')
        report=engine.register(APPROX(name='APPROX',log=False,reference=True,run=BinghamAPPROX))
        json=report.tojson()
        for key in ('upper_certified','lower_poisson','lower_normal','lower_asymptotic','reference','reference_radius'): self.assertIn(key,json)
        self.assertTrue(json['flags']['growth'])
        self.assertFalse(json['flags']['log'])
        self.assertLessEqual(report.remainder_lower,report.extras['reference'])
        self.assertLessEqual(report.extras['reference'],report.extras['upper_certified'])
        self.assertLessEqual(report.remainder_upper_series,report.remainder_upper_closed)
        logged=engine.approx(log=True)
        self.assertAlmostEqual(logged.remainder_upper_series,math.log(report.remainder_upper_series),places=10)
        self.assertRaises(InputError,Bingham,np.eye(3),np.eye(2))

    def test_indefinite(self):
        engine=Bingham(np.diag([1.0,-0.5]),np.diag([0.6,0.4,0.2]),m=2)
        report=engine.approx()
        self.assertIsNone(report.remainder_lower)
        self.assertNotIn('lower_poisson',report.extras)
        self.assertIsNotNone(report.remainder_upper_closed)

    def test_zero(self):
        engine=Bingham(np.eye(2),np.zeros((4,4)),m=3)
        self.assertEqual(engine.parameters['gamma0'],0.0)
        bounds=engine.upper()
        self.assertEqual((bounds.t,bounds.upper_series,bounds.upper_closed),(0.0,0.0,0.0))
        report=engine.approx(reference=True)
        self.assertEqual(report.value,1.0)
        self.assertEqual((report.remainder_upper_series,report.remainder_upper_closed),(0.0,0.0))
        self.assertEqual((report.extras['reference'],report.extras['reference_radius']),(0.0,0.0))
        self.assertIsNone(report.remainder_lower)

class TestLangevin(TestCase):
    def test_approx(self):
        engine=Langevin([[0.2],[0.0],[0.0]],m=2,name='langevin')
        report=engine.register(APPROX(name='APPROX',reference=True,run=LangevinAPPROX))
        self.assertAlmostEqual(report.value,1+0.01/1.5,places=14)
        self.assertLessEqual(report.extras['lower_single'],report.remainder_lower)
        self.assertLessEqual(report.remainder_lower,report.extras['reference'])
        self.assertLessEqual(report.extras['reference'],report.extras['upper_certified'])
        deficient=Langevin([[1.0,0.0],[0.0,0.0],[0.0,0.0]],m=2).approx()
        self.assertIsNone(deficient.remainder_lower)
        self.assertNotIn('lower_single',deficient.extras)

    def test_exact(self):
        report=Langevin([[1.0],[0.0]],m=3,mode='exact').approx()
        self.assertEqual(report.tojson()['value_exact'],'81/64')

    def test_selectm(self):
        B=np.zeros((64,1))
        B[0,0]=0.5
        engine=Langevin(B,m=2,name='select')
        result=engine.register(SELECTM(name='SELECTM',tol=1e-8,run=LangevinSELECTM))
        self.assertTrue(result.found)
        self.assertEqual(result.m,3)
        self.assertEqual(engine.parameters['m'],3)
        self.assertLessEqual(engine.approx().remainder_upper_closed,1e-8)

    def test_mccheck(self):
        print()
        engine=Langevin([[1.0],[0.0]],m=4,name='mc')
        result=engine.register(MCCHECK(name='MCCHECK',samples=20000,seed=42,run=LangevinMCCHECK))
        self.assertAlmostEqual(result.target,I01,places=12)
        self.assertTrue(result.agree())
        self.assertRaises(DomainError,MCCHECK,samples=1)

    def test_zero(self):
        engine=Langevin(np.zeros((4,2)),m=3)
        self.assertEqual(engine.parameters['gamma0'],0.0)
        bounds=engine.upper()
        self.assertEqual((bounds.t,bounds.upper_series,bounds.upper_closed),(0.0,0.0,0.0))
        report=engine.approx(reference=True)
        self.assertEqual(report.value,1.0)
        self.assertEqual((report.remainder_upper_series,report.remainder_upper_closed),(0.0,0.0))
        self.assertEqual((report.extras['reference'],report.extras['reference_radius']),(0.0,0.0))

normconst=TestSuite([
                    TestLoader().loadTestsFromTestCase(TestBingham),
                    TestLoader().loadTestsFromTestCase(TestLangevin),
                    ])
