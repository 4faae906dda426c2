'''
Verify test (6 tests in total).
'''

__all__=['verify']

import numpy as np
from fractions import Fraction
from StiefelNorm.Basics import DomainError
from StiefelNorm.Misc import SymmetricMatrix
from StiefelNorm.Zonal import zonaltable
from StiefelNorm.Verify import *
from unittest import TestCase,TestLoader,TestSuite

class TestCheckResult(TestCase):
    def test_result(self):
        self.assertTrue(CheckResult('exact',Fraction(1,3),Fraction(1,3)).passed)
        self.assertFalse(CheckResult('exact',Fraction(1,3)+Fraction(1,10**30),Fraction(1,3)).passed)
        self.assertTrue(CheckResult('float',1.0+1e-13,1.0).passed)
        self.assertFalse(CheckResult('float',1.1,1.0).passed)
        self.assertAlmostEqual(CheckResult('float',1.0,1.5).margin,0.5)
        self.assertEqual(CheckResult('float',1.0,1.5,'d=2').tojson()['witness'],'d=2')

class TestChecks(TestCase):
    def setUp(self):
        self.table=zonaltable(3,3)
        self.Sigma=SymmetricMatrix([[0.9,0.2,0.1],[0.2,0.5,-0.1],[0.1,-0.1,0.3]])

    def test_combinatorial(self):
        self.assertTrue(checkfactorial((1,1),2).passed)
        self.assertTrue(checkfactorial((3,0,2),3).passed)
        self.assertTrue(all(result.passed for result in checkpochhammer((2,1),4,2)))
        self.assertEqual(checkpochhammer((2,),4,1)[0].rhs,6)
        self.assertTrue(all(result.passed for result in checkratio((2,1),5,2)))
        self.assertRaises(DomainError,checkpochhammer,(1,),4,1)
        self.assertRaises(DomainError,checkfactorial,(1,),2)

    def test_zonal(self):
        for kappa in [(1,),(2,),(1,1),(3,),(2,1),(1,1,1)]:
            self.assertTrue(checkabs(kappa,SymmetricMatrix(np.diag([1.0,-0.5,0.25])),self.table).passed)
            self.assertTrue(checkzonalupper(kappa,self.Sigma,3,self.table).passed)
            self.assertTrue(checkfk(kappa,self.Sigma,self.table)[0].passed)
            self.assertTrue(checkzonallower(kappa,self.Sigma,self.table).passed)
        self.assertRaises(DomainError,checkfk,(1,),SymmetricMatrix(np.diag([1.0,-1.0,1.0])),self.table)

    def test_tightness(self):
        print()
        self.assertAlmostEqual(checkscalartightness((1,1),64,2).rhs,1.2121,places=4)
        sweep=tightnesssweep((1,1),2,1,6)
        print(sweep)
        self.assertEqual([d for d,_ in sweep],[2,4,8,16,32,64])
        self.assertTrue(all(ratio>=1 for _,ratio in sweep))
        result,ratio=checkfk((1,1),spikedspectrum(64,2),zonaltable(2,2))
        self.assertTrue(result.passed)
        self.assertLess(ratio,1.0)

class TestVerifySuite(TestCase):
    def test_suite(self):
        print()
        results=suite(maxweight=3,dims=(2,3,4),seed=SEED,count=5)
        print(summary(results))
        self.assertEqual(list(results.keys()),sorted(results.keys()))
        self.assertTrue({'abs','factorial','fk','zonal_lower','zonal_upper','scalar_tightness'}<=set(results.keys()))
        self.assertTrue(all(result.passed for group in results.values() for result in group))
        self.assertRaises(DomainError,suite,0)

verify=TestSuite([
                TestLoader().loadTestsFromTestCase(TestCheckResult),
                TestLoader().loadTestsFromTestCase(TestChecks),
                TestLoader().loadTestsFromTestCase(TestVerifySuite),
                ])
