'''
Linalg test (6 tests in total).
'''

__all__=['linalg']

import os
import tempfile
import warnings
import numpy as np
import scipy.linalg as sl
from StiefelNorm.Basics import InputError
from StiefelNorm.Misc import *
from unittest import TestCase,TestLoader,TestSuite

class TestMatrices(TestCase):
    def test_symmetric(self):
        M=SymmetricMatrix([[1.0,2.0],[2.0+1e-12,3.0]])
        self.assertEqual(M.n,2)
        self.assertAlmostEqual(M.entries[0,1],M.entries[1,0])
        self.assertRaises(InputError,SymmetricMatrix,[[1.0,2.0],[0.0,1.0]])
        self.assertRaises(InputError,SymmetricMatrix,[[np.nan]])
        self.assertRaises(InputError,SymmetricMatrix,[[1.0,2.0]])

    def test_rect(self):
        B=RectMatrix(np.ones((4,2)))
        self.assertEqual((B.d,B.p),(4,2))
        self.assertRaises(InputError,RectMatrix,np.ones((2,4)))

class TestEigensym(TestCase):
    def setUp(self):
        np.random.seed(1)
        g=np.random.random((6,6))
        self.M=(g+g.T)/2

    def test_eigensym(self):
        es=eigensym(self.M)
        self.assertTrue(np.all(np.diff(es.values)<=0))
        self.assertAlmostEqual(sl.norm(es.values-np.sort(sl.eigh(self.M,eigvals_only=True))[::-1]),0.0)
        self.assertLess(es.residual,1e-12)
        self.assertAlmostEqual(sl.norm(es.vectors.T.dot(es.vectors)-np.eye(6)),0.0)

    def test_convergence(self):
        q,_=np.linalg.qr(np.random.random((4,4)))
        M=q.dot(np.diag([0.298,0.759,2.162,9.382])).dot(q.T)
        with warnings.catch_warnings(),np.errstate(over='raise',divide='raise',invalid='raise'):
            warnings.simplefilter('error')
            es=eigensym((M+M.T)/2)
            tiny=eigensym([[0.0,1e-310],[1e-310,1.0]])
        self.assertLessEqual(es.sweeps,10)
        self.assertTrue(np.allclose(es.values,[9.382,2.162,0.759,0.298],atol=1e-12))
        self.assertLess(es.residual,1e-12)
        self.assertEqual(eigensym(np.diag([3.0,1.0,2.0])).sweeps,0)
        self.assertTrue(np.array_equal(tiny.values,[1.0,0.0]))

    def test_derived(self):
        self.assertAlmostEqual(frobenius(self.M),sl.norm(self.M))
        self.assertTrue(np.all(np.diag(absdiag(self.M).entries)>=0))
        B=np.arange(6.0).reshape((3,2))
        self.assertAlmostEqual(sl.norm(langevingram(B).entries-B.T.dot(B)/4),0.0)

class TestJson(TestCase):
    def test_json(self):
        B=RectMatrix([[1.0,0.5],[0.0,2.0],[3.0,1.0]])
        path=os.path.join(tempfile.mkdtemp(),'B.json')
        writematrix(B,path)
        self.assertTrue(np.array_equal(readmatrix(path,symmetric=False).entries,B.entries))
        self.assertEqual(matrixtojson(B)['rows'],3)
        self.assertRaises(InputError,matrixfromjson,{'rows':2,'cols':2,'data':[1.0,2.0,3.0]})
        self.assertRaises(InputError,readmatrix,os.path.join(tempfile.mkdtemp(),'missing.json'))

linalg=TestSuite([
                TestLoader().loadTestsFromTestCase(TestMatrices),
                TestLoader().loadTestsFromTestCase(TestEigensym),
                TestLoader().loadTestsFromTestCase(TestJson),
                ])
