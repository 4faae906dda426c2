'''
======================
Normalizing constants
======================

Base class of the engines of the normalizing constants, including:
    * classes: NormConst, APPROX, MCCHECK, SELECTM
'''

__all__=['NormConst','APPROX','MCCHECK','SELECTM']

from ..Basics import Engine,App,DomainError
from ..Series import SeriesParams,seriestable
from ..Bounds import GrowthParams,select_m
from ..Verify import SEED

class NormConst(Engine):
    '''
    Base class of the engines of the normalizing constants.

    Attributes
    ----------
    mode : 'exact' or 'floating'
        The arithmetic mode of the truncated series.
    cache : None, True or str
        The cache argument of the zonal tables.
    zonal : ZonalTable
        The current zonal table.

    Supported methods:
        =============     ===============================================================
        METHODS           DESCRIPTION
        =============     ===============================================================
        `*APPROX`         the truncated value together with the bounds of the remainder
        `*MCCHECK`        the comparison with the Monte Carlo oracle
        `*SELECTM`        the truncation order achieving a tolerance
        =============     ===============================================================
    '''
    KIND=None

    def initialize(self,d,p,m,kmax=None,gamma0=1.0,r=0.0,mode='floating',cache=None):
        '''
        Set the parameters of the engine.

        Parameters
        ----------
        d,p : int
            The dimensions.
        m : int
            The truncation order.
        kmax : int, optional
            The cutoff degree of the reference remainder.
        gamma0,r : float, optional
            The growth parameters.
        mode : 'exact' or 'floating', optional
            The arithmetic mode.
        cache : None, True or str, optional
            The cache argument of the zonal tables.
        '''
        params=SeriesParams(d,p,m,kmax=kmax,mode=mode)
        GrowthParams(gamma0,r)
        self.parameters.update(d=d,p=p,m=m,kmax=params.kmax,gamma0=gamma0,r=r)
        self.mode=mode
        self.cache=cache
        self.zonal=None

    @property
    def params(self):
        '''
        The parameters of the truncated series.
        '''
        return SeriesParams(self.parameters['d'],self.parameters['p'],self.parameters['m'],kmax=max(self.parameters['kmax'],self.parameters['m']),mode=self.mode)

    @property
    def growth(self):
        '''
        The growth parameters.
        '''
        return GrowthParams(self.parameters['gamma0'],self.parameters['r'])

    def table(self,maxweight):
        '''
        The zonal table covering the series up to a degree, built on demand.
        '''
        params=self.params
        evallen=params.d if self.KIND=='phi' else params.p
        if self.zonal is None or not self.zonal.covers(maxweight,params.p,evallen):
            self.zonal=seriestable(self.KIND,params,maxweight,cache=self.cache)
            self.log<<'%s: zonal table %s ready.\n'%(self.__class__.__name__,self.zonal.key)
        return self.zonal

    def approx(self,log=False,reference=False):
        '''
        The truncated value together with all the applicable bounds of the remainder.

        Parameters
        ----------
        log : logical, optional
            True for the bounds reported as natural logarithms.
        reference : logical, optional
            True for attaching the reference remainder.

        Returns
        -------
        ApproxReport
            The report.
        '''
        report=self.truncated()
        if self.parameters['m']>=2: report.update(bounds=self.upper(log=log))
        report.update(lower=self.lower(log=log),**self.extras(log=log))
        report.flags['log']=log
        if reference:
            value,radius=self.reference()
            report.update(reference=value,reference_radius=radius)
        return report

    def mccheck(self,samples,seed):
        '''
        Compare the Monte Carlo estimate with the truncated value plus the reference remainder.

        Parameters
        ----------
        samples : int
            The number of the samples.
        seed : int
            The seed.

        Returns
        -------
        McEstimate
            The estimate, whose target and slack are the centre and the radius of the certified interval.
        '''
        value=float(self.truncated().value)
        remainder,radius=self.reference()
        result=self.mc(samples,seed)
        result.target,result.slack=value+remainder,radius
        return result

    def selectm(self,tol,mmax=40):
        '''
        Select the smallest truncation order whose closed-form bound achieves a tolerance, and adopt it when found.

        Parameters
        ----------
        tol : float
            The tolerance.
        mmax : int, optional
            The maximum order to scan.

        Returns
        -------
        Selection
            The selection.
        '''
        params=self.params
        result=select_m(tol,self.KIND,params.d,params.p,self.growth,A=getattr(self,'A',None),mmax=mmax)
        if result.found: self.update(m=result.m,kmax=max(self.parameters['kmax'],result.m))
        return result

    def truncated(self):
        raise NotImplementedError('%s truncated error: not implemented.'%self.__class__.__name__)

    def reference(self):
        raise NotImplementedError('%s reference error: not implemented.'%self.__class__.__name__)

    def upper(self,log=False):
        raise NotImplementedError('%s upper error: not implemented.'%self.__class__.__name__)

    def lower(self,log=False):
        raise NotImplementedError('%s lower error: not implemented.'%self.__class__.__name__)

    def extras(self,log=False):
        raise NotImplementedError('%s extras error: not implemented.'%self.__class__.__name__)

    def mc(self,samples,seed):
        raise NotImplementedError('%s mc error: not implemented.'%self.__class__.__name__)

class APPROX(App):
    '''
    The truncated value together with the bounds of its remainder.

    Attributes
    ----------
    log : logical
        True for the bounds reported as natural logarithms.
    reference : logical
        True for attaching the reference remainder.
    '''

    def __init__(self,log=False,reference=False,**karg):
        '''
        Constructor.

        Parameters
        ----------
        log : logical, optional
            True for the bounds reported as natural logarithms.
        reference : logical, optional
            True for attaching the reference remainder.
        '''
        self.log=log
        self.reference=reference

class MCCHECK(App):
    '''
    The comparison with the Monte Carlo oracle.

    Attributes
    ----------
    samples : int
        The number of the samples.
    seed : int
        The seed.
    '''

    def __init__(self,samples=10**5,seed=SEED,**karg):
        '''
        Constructor.

        Parameters
        ----------
        samples : int, optional
            The number of the samples.
        seed : int, optional
            The seed.
        '''
        if samples<2: raise DomainError('MCCHECK error: samples(%s) must be at least 2.'%samples)
        self.samples=samples
        self.seed=seed

class SELECTM(App):
    '''
    The truncation order achieving a tolerance.

    Attributes
    ----------
    tol : float
        The tolerance.
    mmax : int
        The maximum order to scan.
    '''

    def __init__(self,tol=10**-8,mmax=40,**karg):
        '''
        Constructor.

        Parameters
        ----------
        tol : float, optional
            The tolerance.
        mmax : int, optional
            The maximum order to scan.
        '''
        self.tol=tol
        self.mmax=mmax
