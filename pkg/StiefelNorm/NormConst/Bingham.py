'''
=====================
Matrix Bingham engine
=====================

The normalizing constant of the matrix Bingham distribution on the Stiefel manifold, including:
    * classes: Bingham
    * functions: BinghamAPPROX, BinghamMCCHECK, BinghamSELECTM
'''

__all__=['Bingham','BinghamAPPROX','BinghamMCCHECK','BinghamSELECTM']

from collections import OrderedDict
from ..Basics import InputError
from ..Misc import SymmetricMatrix,eigensym
from ..Series import phitruncated
from ..Bounds import GrowthParams,check_growth,phi_upper,phi_tail_certified,phi_lower,phi_lower_poisson,phi_lower_normal,phi_lower_asymptotic,phiremainder
from ..MonteCarlo import mcphi
from .NormConst import NormConst

class Bingham(NormConst):
    '''
    The engine of Phi_{d,p}(A,Sigma), the integral of exp(tr(A*x'*Sigma*x)) over the uniform measure of V_{d,p}.

    Attributes
    ----------
    A : SymmetricMatrix
        The p*p parameter matrix.
    Sigma : SymmetricMatrix
        The d*d parameter matrix.
    '''
    KIND='phi'

    def __init__(self,A,Sigma,m=4,kmax=None,gamma0=None,r=0.0,mode='floating',cache=None,**karg):
        '''
        Constructor.

        Parameters
        ----------
        A : SymmetricMatrix or 2d array-like
            The p*p parameter matrix.
        Sigma : SymmetricMatrix or 2d array-like
            The d*d parameter matrix.
        m : int, optional
            The truncation order.
        kmax : int, optional
            The cutoff degree of the reference remainder.
        gamma0 : float, optional
            The growth prefactor. Default the minimal one for Sigma at the exponent r.
        r : float, optional
            The growth exponent.
        mode : 'exact' or 'floating', optional
            The arithmetic mode.
        cache : None, True or str, optional
            The cache argument of the zonal tables.
        '''
        self.A=A if isinstance(A,SymmetricMatrix) else SymmetricMatrix(A)
        self.Sigma=Sigma if isinstance(Sigma,SymmetricMatrix) else SymmetricMatrix(Sigma)
        d,p=self.Sigma.n,self.A.n
        if d<p: raise InputError('Bingham error: d(%s) must not be less than p(%s).'%(d,p))
        if gamma0 is None: gamma0=check_growth(self.Sigma,d,GrowthParams(1.0,r),'phi')[1]
        self.initialize(d,p,m,kmax=kmax,gamma0=gamma0,r=r,mode=mode,cache=cache)

    @property
    def positive(self):
        '''
        True when both A and Sigma are positive definite.
        '''
        return eigensym(self.A).values[-1]>0 and eigensym(self.Sigma).values[-1]>0

    def truncated(self):
        '''
        The truncated series.
        '''
        params=self.params
        return phitruncated(self.A,self.Sigma,params,self.table(params.m-1))

    def reference(self):
        '''
        The reference remainder as the centre and the radius of a certified interval.
        '''
        params=self.params
        return phiremainder(self.A,self.Sigma,params,self.table(params.kmax),cache=self.cache)

    def upper(self,log=False):
        '''
        The upper bounds of the remainder.
        '''
        params=self.params
        return phi_upper(params.m,self.A,params.d,params.p,self.growth,Sigma=self.Sigma,log=log)

    def lower(self,log=False):
        '''
        The lower bound of the remainder, None unless A and Sigma are positive definite.
        '''
        params=self.params
        return phi_lower(params.m,self.A,self.Sigma,params.d,params.p,log=log) if self.positive else None

    def extras(self,log=False):
        '''
        The certified upper bound and the alternative forms of the lower bound.
        '''
        params=self.params
        result=OrderedDict()
        result['upper_certified']=phi_tail_certified(params.m,self.A,self.Sigma,params.d,params.p,log=log)
        if self.positive:
            for name,bound in [('lower_poisson',phi_lower_poisson),('lower_normal',phi_lower_normal),('lower_asymptotic',phi_lower_asymptotic)]:
                result[name]=bound(params.m,self.A,self.Sigma,params.d,params.p,log=log)
        return result

    def mc(self,samples,seed):
        '''
        The Monte Carlo estimate.
        '''
        return mcphi(self.A,self.Sigma,samples,seed)

def BinghamAPPROX(engine,app):
    '''
    This method calculates the truncated matrix Bingham constant and the bounds of its remainder.
    '''
    report=engine.approx(log=app.log,reference=app.reference)
    engine.log<<'%s\n'%report.tostr()
    if app.returndata: return report

def BinghamMCCHECK(engine,app):
    '''
    This method compares the truncated matrix Bingham constant with its Monte Carlo estimate.
    '''
    result=engine.mccheck(app.samples,app.seed)
    engine.log<<'MCCHECK: mean=%r, stderr=%r, target=%r, slack=%r, agree=%s\n'%(result.mean,result.stderr,result.target,result.slack,result.agree())
    if app.returndata: return result

def BinghamSELECTM(engine,app):
    '''
    This method selects the truncation order of the matrix Bingham constant achieving a tolerance.
    '''
    result=engine.selectm(app.tol,app.mmax)
    engine.log<<'SELECTM: %r\n'%result
    if app.returndata: return result
