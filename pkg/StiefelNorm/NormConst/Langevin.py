'''
======================
Matrix Langevin engine
======================

The normalizing constant of the matrix Langevin distribution on the Stiefel manifold, including:
    * classes: Langevin
    * functions: LangevinAPPROX, LangevinMCCHECK, LangevinSELECTM
'''

__all__=['Langevin','LangevinAPPROX','LangevinMCCHECK','LangevinSELECTM']

from collections import OrderedDict
from ..Basics import DomainError
from ..Misc import RectMatrix
from ..Series import psitruncated
from ..Bounds import GrowthParams,check_growth,psi_upper,psi_tail_certified,psi_lower,psiremainder
from ..MonteCarlo import mcpsi
from .NormConst import NormConst

class Langevin(NormConst):
    '''
    The engine of Psi_{d,p}(B), the integral of exp(tr(B'x)) over the uniform measure of V_{d,p}.

    Attributes
    ----------
    B : RectMatrix
        The d*p parameter matrix.
    '''
    KIND='psi'

    def __init__(self,B,m=4,kmax=None,gamma0=None,r=0.0,mode='floating',cache=None,**karg):
        '''
        Constructor.

        Parameters
        ----------
        B : RectMatrix or 2d array-like
            The d*p parameter matrix.
        m : int, optional
            The truncation order.
        kmax : int, optional
            The cutoff degree of the reference remainder.
        gamma0 : float, optional
            The growth prefactor. Default the minimal one for B at the exponent r.
        r : float, optional
            The growth exponent.
        mode : 'exact' or 'floating', optional
            The arithmetic mode.
        cache : None, True or str, optional
            The cache argument of the zonal tables.
        '''
        self.B=B if isinstance(B,RectMatrix) else RectMatrix(B)
        d,p=self.B.shape
        if gamma0 is None: gamma0=check_growth(self.B,d,GrowthParams(1.0,r),'psi')[1]
        self.initialize(d,p,m,kmax=kmax,gamma0=gamma0,r=r,mode=mode,cache=cache)
        self.lowers={}

    def truncated(self):
        '''
        The truncated series.
        '''
        params=self.params
        return psitruncated(self.B,params,self.table(params.m-1))

    def reference(self):
        '''
        The reference remainder as the centre and the radius of a certified interval.
        '''
        params=self.params
        return psiremainder(self.B,params,self.table(params.kmax),cache=self.cache)

    def upper(self,log=False):
        '''
        The upper bounds of the remainder.
        '''
        params=self.params
        return psi_upper(params.m,params.d,params.p,self.growth,B=self.B,log=log)

    def _lowers_(self,log):
        params=self.params
        key=(params.m,params.d,params.p,log)
        if key not in self.lowers:
            try:
                self.lowers[key]=psi_lower(params.m,self.B,params.d,params.p,log=log)
            except DomainError:
                self.lowers[key]=(None,None)
        return self.lowers[key]

    def lower(self,log=False):
        '''
        The lower bound of the remainder, None unless B has full column rank.
        '''
        return self._lowers_(log)[0]

    def extras(self,log=False):
        '''
        The certified upper bound and the single-term lower bound.
        '''
        params=self.params
        result=OrderedDict()
        result['upper_certified']=psi_tail_certified(params.m,self.B,params.d,params.p,log=log)
        single=self._lowers_(log)[1]
        if single is not None: result['lower_single']=single
        return result

    def mc(self,samples,seed):
        '''
        The Monte Carlo estimate.
        '''
        return mcpsi(self.B,samples,seed)

def LangevinAPPROX(engine,app):
    '''
    This method calculates the truncated matrix Langevin constant and the bounds of its remainder.
    '''
    report=engine.approx(log=app.log,reference=app.reference)
    engine.log<<'%s\n'%report.tostr()
    if app.returndata: return report

def LangevinMCCHECK(engine,app):
    '''
    This method compares the truncated matrix Langevin constant with its Monte Carlo estimate.
    '''
    result=engine.mccheck(app.samples,app.seed)
    engine.log<<'MCCHECK: mean=%r, stderr=%r, target=%r, slack=%r, agree=%s\n'%(result.mean,result.stderr,result.target,result.slack,result.agree())
    if app.returndata: return result

def LangevinSELECTM(engine,app):
    '''
    This method selects the truncation order of the matrix Langevin constant achieving a tolerance.
    '''
    result=engine.selectm(app.tol,app.mmax)
    engine.log<<'SELECTM: %r\n'%result
    if app.returndata: return result
