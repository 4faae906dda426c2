'''
Zonal test (9 tests in total).
'''

__all__=['zonal']

import os
import tempfile
from fractions import Fraction
from StiefelNorm.Basics import DomainError,ResourceError
from StiefelNorm.Misc import RandomStream
from StiefelNorm.Zonal import *
from unittest import TestCase,TestLoader,TestSuite

class TestZonalCoeffs(TestCase):
    def test_coefficients(self):
        print()
        self.assertEqual(list(zonalcoeffs((3,)).items()),[((3,),Fraction(1)),((2,1),Fraction(3,5)),((1,1,1),Fraction(2,5))])
        self.assertEqual(dict(zonalcoeffs((2,))),{(2,):Fraction(1),(1,1):Fraction(2,3)})
        self.assertEqual(dict(zonalcoeffs((1,1))),{(1,1):Fraction(4,3)})
        self.assertEqual(dict(zonalcoeffs(())),{():Fraction(1)})

    def test_restricted(self):
        full,restricted=zonalcoeffs((2,1)),zonalcoeffs((2,1),evallen=2)
        self.assertEqual(list(restricted.keys()),[(2,1)])
        self.assertEqual(restricted[(2,1)],full[(2,1)])

    def test_unitvalue(self):
        for d in (1,2,4,7):
            self.assertEqual(sum(unitvalue(kappa,d) for kappa in partitions(4,d)),d**4)
        self.assertEqual(unitvalue((1,),5),5)
        self.assertRaises(DomainError,unitvalue,(1,1),1)

class TestEvaluation(TestCase):
    def setUp(self):
        self.table=zonaltable(4,4)

    def test_monomial(self):
        self.assertEqual(monomial((1,1),[1,2,3]),11)
        self.assertEqual(monomial((2,1),[1,0,2]),6)
        self.assertEqual(monomial((1,1,1),[1,2]),0)

    def test_powersum(self):
        eigs=[Fraction(3,2),Fraction(-1,3),Fraction(2),Fraction(1,7)]
        for k in range(5):
            self.assertEqual(sum(evalzonal(kappa,eigs,self.table) for kappa in partitions(k,4)),sum(eigs)**k)
        floats=[float(x) for x in eigs]
        self.assertAlmostEqual(sum(evalzonal(kappa,floats,self.table) for kappa in partitions(3,4)),sum(floats)**3)

class TestIdentities(TestCase):
    def test_trace(self):
        table,stream=zonaltable(10,6),RandomStream(10)
        for n in range(50):
            d=1+n%6
            eigs=[Fraction(int(19*u)-9,1+int(9*v)) for u,v in stream.uniform((d,2))]
            monomials={}
            for k in range(11):
                self.assertEqual(sum((evalzonal(kappa,eigs,table,monomials) for kappa in partitions(k,d)),Fraction(0)),sum(eigs,Fraction(0))**k)

    def test_invariance(self):
        table=zonaltable(8,8)
        for k in range(1,9):
            for kappa in partitions(k,8):
                ratios={evalzonal(kappa,[1]*d,table)/partitionalshiftedfactorial(Fraction(d,2),kappa) for d in range(kappa.length,13)}
                self.assertEqual(len(ratios),1)
                self.assertEqual(ratios.pop(),unitvalue(kappa,kappa.length)/partitionalshiftedfactorial(Fraction(kappa.length,2),kappa))

    def test_symmetry(self):
        table,stream=zonaltable(6,4),RandomStream(11)
        eigs=[Fraction(3,2),Fraction(-1,3),Fraction(2),Fraction(1,7)]
        c=Fraction(-5,3)
        for k in range(7):
            for kappa in partitions(k,4):
                value=evalzonal(kappa,eigs,table)
                self.assertEqual(evalzonal(kappa,[c*x for x in eigs],table),c**k*value)
                self.assertEqual(evalzonal(kappa,eigs[::-1],table),value)
                self.assertEqual(evalzonal(kappa,eigs[1:]+eigs[:1],table),value)
                self.assertGreaterEqual(evalzonal(kappa,[abs(x) for x in eigs],table),0)
                self.assertGreaterEqual(evalzonal(kappa,list(stream.uniform(4)),table),0.0)

class TestZonalTable(TestCase):
    def test_table(self):
        dir=tempfile.mkdtemp()
        table=zonaltable(3,3,cache=dir)
        self.assertEqual(table.key,'zonal-v1-w3-l3-eall')
        self.assertTrue(os.path.exists(os.path.join(dir,'%s.txt'%table.key)))
        loaded=ZonalTable.load(os.path.join(dir,'%s.txt'%table.key))
        self.assertEqual(loaded.coeffs,table.coeffs)
        self.assertEqual(zonaltable(2,2,cache=dir).coeffs,table.restricted(2,2).coeffs)
        self.assertTrue(table.covers(3,3))
        self.assertFalse(table.covers(4,3))
        self.assertIn((2,1),table)
        self.assertRaises(DomainError,table.__getitem__,(4,))
        self.assertRaises(ResourceError,zonaltable,ZonalTable.CAP+1,2)
        self.assertEqual(len(table.tojson(3)['coefficients']),len(table.items(3)))
        print()
        print(table.tostr(3))

zonal=TestSuite([
                TestLoader().loadTestsFromTestCase(TestZonalCoeffs),
                TestLoader().loadTestsFromTestCase(TestEvaluation),
                TestLoader().loadTestsFromTestCase(TestIdentities),
                TestLoader().loadTestsFromTestCase(TestZonalTable),
                ])
