'''
Partition test (4 tests in total).
'''

__all__=['partition']

from fractions import Fraction
from StiefelNorm.Basics import InputError,DomainError
from StiefelNorm.Zonal.Partition import *
from unittest import TestCase,TestLoader,TestSuite

class TestPartition(TestCase):
    def test_construction(self):
        self.assertEqual(Partition((2,1,0,0)),(2,1))
        self.assertEqual(Partition.fromstr('κ=[3,1,1]'),Partition((3,1,1)))
        self.assertEqual(Partition.fromstr('kappa=[2, 2]'),Partition((2,2)))
        self.assertEqual(Partition.fromstr('[]'),Partition())
        self.assertRaises(InputError,Partition,(1,2))
        self.assertRaises(InputError,Partition.fromstr,'[a,b]')
        kappa=Partition((3,1,1))
        self.assertEqual((kappa.weight,kappa.length),(5,3))
        self.assertEqual(kappa.multiplicities[1],2)
        self.assertEqual(kappa.padded(5),(3,1,1,0,0))
        self.assertEqual(str(kappa),'(3,1,1)')

    def test_partitions(self):
        print()
        self.assertEqual(partitions(4,4),[(4,),(3,1),(2,2),(2,1,1),(1,1,1,1)])
        self.assertEqual(partitions(4,2),[(4,),(3,1),(2,2)])
        self.assertEqual(partitions(0,3),[()])
        self.assertEqual(len(partitions(10,10)),partitioncount(10))
        self.assertEqual(partitioncount(10),42)
        self.assertEqual(partitioncount(6,2),4)
        self.assertRaises(DomainError,partitions,-1,2)

    def test_lexcompare(self):
        self.assertEqual(lexcompare((3,1),(2,2)),1)
        self.assertEqual(lexcompare((2,1,1),(2,2)),-1)
        self.assertEqual(lexcompare((2,2),(2,2)),0)
        self.assertRaises(DomainError,lexcompare,(2,),(1,))

    def test_factorials(self):
        self.assertEqual(shiftedfactorial(Fraction(1,2),3),Fraction(15,8))
        self.assertEqual(shiftedfactorial(5,0),1)
        self.assertEqual(partitionalshiftedfactorial(Fraction(3,2),Partition((2,1))),Fraction(15,4))
        self.assertAlmostEqual(partitionalshiftedfactorial(1.5,Partition((2,1))),3.75)
        self.assertEqual(rho((2,1)),1)
        self.assertEqual(rho((3,)),6)

partition=TestSuite([
                    TestLoader().loadTestsFromTestCase(TestPartition),
                    ])
