'''
Bounds test (14 tests in total).
'''

__all__=['bounds']

import math
import numpy as np
from scipy.stats import norm,poisson
from StiefelNorm.Basics import DomainError
from StiefelNorm.Misc import SymmetricMatrix,RectMatrix
from StiefelNorm.Series import SeriesParams
from StiefelNorm.Bounds import *
from unittest import TestCase,TestLoader,TestSuite

class TestConstants(TestCase):
    def test_constants(self):
        self.assertAlmostEqual(alpha_p(1),1.0)
        self.assertAlmostEqual(alpha_p(2),0.86668,places=5)
        self.assertAlmostEqual(gamma1(),1.3660254037844386)
        self.assertAlmostEqual(c_m(1),1.359141,places=6)
        self.assertAlmostEqual(c_m(2),1.208188,places=6)
        self.assertEqual([n_dim(n) for n in (1,2,3,4)],[0,2,5,9])
        self.assertRaises(DomainError,alpha_p,0)

    def test_r_m(self):
        self.assertAlmostEqual(r_m_series(2,1.0),1.46952,places=5)
        self.assertAlmostEqual(r_m_series(2,1.0,log=True),math.log(r_m_series(2,1.0)),places=12)
        self.assertEqual(r_m_series(3,0.0),0.0)
        for m in (2,3,5,10,20):
            for t in (0.05,0.5,1.0,2.0,5.0):
                self.assertLessEqual(r_m_series(m,t),r_m_closed(m,t)*(1+1e-12))
        self.assertRaises(DomainError,r_m_closed,1,1.0)
        self.assertGreater(r_m_closed(2,40.0,log=True),700)

    def test_abscissas(self):
        A,g=SymmetricMatrix([[1.0]]),GrowthParams()
        self.assertAlmostEqual(t_phi(A,4,1,g),0.683013,places=6)
        self.assertAlmostEqual(t_phi(A,16,1,g),0.341506,places=6)
        self.assertAlmostEqual(t_psi(4,1,g),0.341506,places=6)
        self.assertAlmostEqual(d_phi(t_phi(A,9,1,g),A,1,g),9.0)
        self.assertAlmostEqual(d_psi(t_psi(7,2,GrowthParams(2.0,1.0)),2,GrowthParams(2.0,1.0)),7.0)
        self.assertAlmostEqual(t_psi(m_decreasing_threshold('psi',1,g),1,g),1.0)
        self.assertTrue(GrowthParams(1.0,0.5).inrange('phi'))
        self.assertFalse(GrowthParams(1.0,2.0).inrange('phi'))
        self.assertTrue(GrowthParams(1.0,2.0).inrange('psi'))
        self.assertEqual(GrowthParams(0.0).gamma0,0.0)
        self.assertRaises(DomainError,GrowthParams,-1.0)

    def test_growth(self):
        Sigma=SymmetricMatrix(np.eye(4))
        self.assertEqual(check_growth(Sigma,4,GrowthParams(2.0),'phi'),(True,2.0))
        self.assertFalse(check_growth(Sigma,4,GrowthParams(1.0),'phi')[0])
        B=RectMatrix([[2.0],[0.0],[0.0],[0.0]])
        self.assertAlmostEqual(check_growth(B,4,GrowthParams(),'psi')[1],1.0)
        self.assertEqual(check_growth(SymmetricMatrix(np.zeros((4,4))),4,GrowthParams(0.0),'phi'),(True,0.0))
        self.assertEqual(check_growth(RectMatrix(np.zeros((4,2))),4,GrowthParams(0.0),'psi'),(True,0.0))

class TestPhiBounds(TestCase):
    def test_exponential(self):
        A,Sigma=SymmetricMatrix([[1.0]]),SymmetricMatrix([[1.0]])
        self.assertAlmostEqual(phi_lower(2,A,Sigma,1,1),math.e-2,places=13)
        self.assertAlmostEqual(phi_lower_poisson(2,A,Sigma,1,1),math.e-2,places=12)
        self.assertGreater(phi_tail_certified(2,A,Sigma,1,1),math.e-2)

    def test_sandwich(self):
        print()
        A,Sigma=SymmetricMatrix(np.diag([1.0,0.5])),SymmetricMatrix(np.diag([0.6,0.4,0.2]))
        for m in (2,3,4):
            true=phiremainder(A,Sigma,SeriesParams(3,2,m))[0]
            lower,upper=phi_lower(m,A,Sigma,3,2),phi_tail_certified(m,A,Sigma,3,2)
            print('m=%s: %.6e <= %.6e <= %.6e'%(m,lower,true,upper))
            self.assertLessEqual(lower,true)
            self.assertLessEqual(true,upper)
        report=phi_upper(3,A,3,2,GrowthParams(check_growth(Sigma,3,GrowthParams(),'phi')[1]),Sigma=Sigma)
        self.assertTrue(report.flags['growth'])
        self.assertLessEqual(report.upper_series,report.upper_closed)
        self.assertAlmostEqual(report.upper_series,phi_tail_certified(3,A,Sigma,3,2),places=12)
        self.assertRaises(DomainError,phi_upper,1,A,3,2,GrowthParams())
        self.assertRaises(DomainError,phi_lower,2,SymmetricMatrix(np.diag([1.0,0.0])),Sigma,3,2)
        for bound in (phi_lower_poisson,phi_lower_normal,phi_lower_asymptotic):
            self.assertGreater(bound(3,A,Sigma,3,2),0.0)

    def test_zero(self):
        A,g=SymmetricMatrix(np.eye(2)),GrowthParams(0.0)
        report=phi_upper(3,A,4,2,g,Sigma=SymmetricMatrix(np.zeros((4,4))))
        self.assertEqual((report.t,report.upper_series,report.upper_closed),(0.0,0.0,0.0))
        self.assertTrue(report.flags['growth'])
        self.assertEqual(phi_upper(3,A,4,2,g,Sigma=SymmetricMatrix(np.zeros((4,4))),log=True).upper_series,-np.inf)
        report=psi_upper(3,4,2,g,B=RectMatrix(np.zeros((4,2))))
        self.assertEqual((report.t,report.upper_series,report.upper_closed),(0.0,0.0,0.0))
        self.assertEqual(select_m(1e-8,'psi',4,2,g).m,2)

    def test_normal(self):
        A,Sigma=SymmetricMatrix([[10.0]]),SymmetricMatrix([[10.0]])
        exact=math.exp(phi_lower_poisson(90,A,Sigma,1,1,log=True)-100)
        approx=math.exp(phi_lower_normal(90,A,Sigma,1,1,log=True)-100)
        print()
        print('P(W>=90)=%.6f, normal approximation=%.6f'%(exact,approx))
        self.assertAlmostEqual(exact,poisson.sf(89,100),places=12)
        self.assertAlmostEqual(approx,norm.sf(-1.05),places=12)
        self.assertLess(abs(exact-approx),0.02)
        self.assertAlmostEqual(phi_lower(90,A,Sigma,1,1,log=True),phi_lower_poisson(90,A,Sigma,1,1,log=True),places=8)

class TestPsiBounds(TestCase):
    def test_sandwich(self):
        B=RectMatrix([[0.2],[0.0],[0.0]])
        true=psiremainder(B,SeriesParams(3,1,2))[0]
        full,single=psi_lower(2,B,3,1)
        g=GrowthParams(check_growth(B,3,GrowthParams(),'psi')[1])
        self.assertLessEqual(single,full)
        self.assertLessEqual(full,true)
        self.assertLessEqual(true,psi_tail_certified(2,B,3,1))
        self.assertLessEqual(true,psi_upper(2,3,1,g,B=B).upper_series)
        self.assertRaises(DomainError,psi_lower,2,RectMatrix([[1.0,0.0],[0.0,0.0],[0.0,0.0]]),3,2)

    def test_optimistic(self):
        B=RectMatrix([[0.2]]+[[0.0]]*5)
        g=GrowthParams(check_growth(B,6,GrowthParams(),'psi')[1])
        true=psiremainder(B,SeriesParams(6,1,2))[0]
        self.assertLess(psi_upper(2,6,1,g,B=B).upper_series,true)
        self.assertLessEqual(true,psi_tail_certified(2,B,6,1))

class TestRates(TestCase):
    def test_rate(self):
        print()
        ds=2**np.arange(3,11)
        for r in (0.0,0.5):
            for m in (2,4):
                g=GrowthParams(1.0,r)
                phis=[phi_upper(m,SymmetricMatrix([[0.1]]),d,1,g,log=True).upper_series for d in ds]
                psis=[psi_upper(m,d,1,g,log=True).upper_series for d in ds]
                for kind,logs,rate in (('phi',phis,-(1-r)*m/2),('psi',psis,-(3-r)*m/2)):
                    slope=np.polyfit(np.log(ds),logs,1)[0]
                    print('%s r=%s m=%s: slope=%.4f, rate=%.4f'%(kind,r,m,slope,rate))
                    self.assertLess(abs(slope-rate),0.1*abs(rate))

    def test_monotonicity(self):
        A,g=SymmetricMatrix(np.diag([1.0,0.5])),GrowthParams()
        for m in (2,3,6):
            self.assertTrue(np.all(np.diff([phi_upper(m,A,d,2,g,log=True).upper_series for d in range(4,513)])<0))
            self.assertTrue(np.all(np.diff([psi_upper(m,d,2,g,log=True).upper_series for d in range(4,513)])<0))
        for d in (4,16,64):
            self.assertTrue(np.all(np.diff([phi_upper(m,A,d,2,g,log=True).upper_series for m in range(2,31)])<0))
            self.assertTrue(np.all(np.diff([psi_upper(m,d,2,g,log=True).upper_series for m in range(2,31)])<0))

    def test_unimodality(self):
        for t in (0.1,0.5,1.0):
            self.assertTrue(np.all(np.diff([r_m_closed(m,t,log=True) for m in range(2,41)])<0))
        for t in (1.6,2.0,3.0,5.0):
            signs=np.sign(np.diff([r_m_closed(m,t,log=True) for m in range(2,41)]))
            self.assertTrue(np.all(signs!=0))
            self.assertEqual(signs[0],1)
            self.assertEqual(np.count_nonzero(np.diff(signs)),1)

class TestSelectM(TestCase):
    def test_select_m(self):
        g=GrowthParams()
        result=select_m(1e-8,'psi',64,1,g)
        self.assertTrue(result.found)
        self.assertLessEqual(result.bound,1e-8)
        self.assertGreater(math.log(alpha_p(1))+r_m_closed(result.m-1,t_psi(64,1,g),log=True),math.log(1e-8))
        result=select_m(1e-8,'phi',1,1,g,A=SymmetricMatrix([[10.0]]),mmax=5)
        self.assertFalse(result.found)
        self.assertIsNone(result.m)
        self.assertTrue(2<=result.argmin<=5)
        self.assertRaises(DomainError,select_m,0.0,'psi',4,1,g)

bounds=TestSuite([
                TestLoader().loadTestsFromTestCase(TestConstants),
                TestLoader().loadTestsFromTestCase(TestPhiBounds),
                TestLoader().loadTestsFromTestCase(TestPsiBounds),
                TestLoader().loadTestsFromTestCase(TestSelectM),
                TestLoader().loadTestsFromTestCase(TestRates),
                ])
