'''
------------------
Truncated series
------------------

Truncated hypergeometric series of matrix argument, including:
    * classes: SeriesParams, ApproxReport
    * functions: seriestable, spectrum, phiterms, psiterms, phitruncated, psitruncated, confluent1f1, scalar1f2
'''

__all__=['SeriesParams','ApproxReport','seriestable','spectrum','phiterms','psiterms','phitruncated','psitruncated','confluent1f1','scalar1f2']

from fractions import Fraction
from collections import OrderedDict
from math import factorial
import numpy as np
import mpmath
import math
from ..Basics import InputError,DomainError,ResourceError,Sheet,floattostr
from ..Misc import eigensym,langevingram
from ..Zonal import ZonalTable,partitionalshiftedfactorial,unitvalue,evalzonal,zonaltable

DPS=30

class SeriesParams(object):
    '''
    The parameters of a truncated series.

    Attributes
    ----------
    d,p : int
        The dimensions of the Stiefel manifold.
    m : int
        The truncation order, i.e. the series includes the degrees 0,...,m-1.
    kmax : int
        The cutoff degree of the reference remainders.
    mode : 'exact' or 'floating'
        'exact' for rational arithmetic on the binary64 spectra and 'floating' for binary64 with compensated summation.
    '''
    KEXTRA=16

    def __init__(self,d,p,m,kmax=None,mode='floating'):
        '''
        Constructor.

        Parameters
        ----------
        d,p : int
            The dimensions.
        m : int
            The truncation order.
        kmax : int, optional
            The cutoff degree of the reference remainders. Default m+KEXTRA bounded by the cap of the zonal tables.
        mode : 'exact' or 'floating', optional
            The arithmetic mode.
        '''
        if not d>=p>=1: raise DomainError('SeriesParams error: d>=p>=1 is required, got d=%s, p=%s.'%(d,p))
        if m<1: raise DomainError('SeriesParams error: m(%s) must be positive.'%m)
        if mode not in ('exact','floating'): raise InputError('SeriesParams error: mode(%r) must be "exact" or "floating".'%(mode,))
        kmax=max(m,min(m+self.KEXTRA,ZonalTable.CAP)) if kmax is None else kmax
        if kmax<m: raise DomainError('SeriesParams error: kmax(%s) must not be less than m(%s).'%(kmax,m))
        self.d=d
        self.p=p
        self.m=m
        self.kmax=kmax
        self.mode=mode

    @property
    def exact(self):
        '''
        True for the exact mode.
        '''
        return self.mode=='exact'

    def __repr__(self):
        '''
        Convert an instance to string.
        '''
        return 'SeriesParams(d=%s,p=%s,m=%s,kmax=%s,mode=%s)'%(self.d,self.p,self.m,self.kmax,self.mode)

class ApproxReport(object):
    '''
    The truncated value of a normalizing constant together with the bounds of its remainder.

    Attributes
    ----------
    kind : 'phi' or 'psi'
        The kind of the normalizing constant.
    params : SeriesParams
        The parameters of the series.
    value : float or Fraction
        The truncated sum.
    degree_terms : list of float or Fraction
        The contributions of the degrees 0,...,m-1.
    remainder_upper_series,remainder_upper_closed,remainder_lower : float or None
        The bounds of the remainder.
    t_value : float or None
        The abscissa of the upper bounds.
    flags : OrderedDict
        The validity flags of the bounds.
    extras : OrderedDict
        The other named values, e.g. the certified upper bound, the alternative lower bounds and the reference remainder.
    '''

    def __init__(self,kind,params,value,degree_terms,remainder_upper_series=None,remainder_upper_closed=None,remainder_lower=None,t_value=None,flags=(),extras=()):
        '''
        Constructor.
        '''
        self.kind=kind
        self.params=params
        self.value=value
        self.degree_terms=list(degree_terms)
        self.remainder_upper_series=remainder_upper_series
        self.remainder_upper_closed=remainder_upper_closed
        self.remainder_lower=remainder_lower
        self.t_value=t_value
        self.flags=OrderedDict(flags)
        self.extras=OrderedDict(extras)

    def update(self,bounds=None,lower=None,**extras):
        '''
        Attach the bounds of the remainder.

        Parameters
        ----------
        bounds : BoundReport, optional
            The upper bounds.
        lower : float, optional
            The lower bound.
        extras : dict, optional
            The other named values.
        '''
        if bounds is not None:
            self.remainder_upper_series=bounds.upper_series
            self.remainder_upper_closed=bounds.upper_closed
            self.t_value=bounds.t
            self.flags.update(bounds.flags)
        if lower is not None: self.remainder_lower=lower
        self.extras.update(extras)
        return self

    def tojson(self):
        '''
        The json object of the report.
        '''
        convert=lambda x: None if x is None else float(x)
        result=OrderedDict()
        result['kind']=self.kind
        result['d'],result['p'],result['m']=self.params.d,self.params.p,self.params.m
        result['mode']=self.params.mode
        result['value']=float(self.value)
        if self.params.exact: result['value_exact']=str(self.value)
        result['degree_terms']=[float(term) for term in self.degree_terms]
        result['t']=convert(self.t_value)
        result['upper_series']=convert(self.remainder_upper_series)
        result['upper_closed']=convert(self.remainder_upper_closed)
        result['lower']=convert(self.remainder_lower)
        result['flags']=self.flags
        for key,value in self.extras.items(): result[key]=convert(value)
        return result

    def tostr(self):
        '''
        The text representation of the report.
        '''
        tags=['value']+['k=%s'%k for k in range(len(self.degree_terms))]+['t','upper_series','upper_closed','lower']+list(self.extras.keys())+list(self.flags.keys())
        sheet=Sheet(cols=('value',),rows=tags,corner='%s(d=%s,p=%s,m=%s)'%(self.kind,self.params.d,self.params.p,self.params.m))
        sheet['value']=floattostr(float(self.value))
        for k,term in enumerate(self.degree_terms): sheet['k=%s'%k]=floattostr(float(term))
        sheet['t']=floattostr(self.t_value)
        sheet['upper_series']=floattostr(self.remainder_upper_series)
        sheet['upper_closed']=floattostr(self.remainder_upper_closed)
        sheet['lower']=floattostr(self.remainder_lower)
        for tag,value in self.extras.items(): sheet[tag]=floattostr(value)
        for tag,flag in self.flags.items(): sheet[tag]=str(flag)
        return sheet.tostr()

    def __str__(self):
        '''
        Convert an instance to string.
        '''
        return self.tostr()

def seriestable(kind,params,maxweight,table=None,cache=None):
    '''
    Get a zonal table that covers the series up to a degree.

    Parameters
    ----------
    kind : 'phi' or 'psi'
        The kind of the series.
    params : SeriesParams
        The parameters of the series.
    maxweight : int
        The maximum degree.
    table : ZonalTable, optional
        The candidate table, which is checked against the requirement when given.
    cache : None, True or str, optional
        The cache argument of `zonaltable`.

    Returns
    -------
    ZonalTable
        The table.
    '''
    assert kind in ('phi','psi')
    evallen=params.d if kind=='phi' else params.p
    if table is None: return zonaltable(maxweight,params.p,evallen=evallen,cache=cache)
    if not table.covers(maxweight,params.p,evallen):
        raise DomainError('seriestable error: the table(maxweight=%s, maxlen=%s, evallen=%s) cannot cover degree %s at length %s with %s eigenvalues.'%(table.maxweight,table.maxlen,table.evallen,maxweight,params.p,evallen))
    return table

def spectrum(M,exact=False):
    '''
    The spectrum of a symmetric matrix, as Fractions in the exact mode.
    '''
    values=eigensym(M).values
    return [Fraction(float(x)) for x in values] if exact else [float(x) for x in values]

def _checkorder_(M,n,name,where):
    if M.n!=n: raise InputError('%s error: %s must be %s*%s, got %s*%s.'%(where,name,n,n,M.n,M.n))

def phiterms(aeigs,seigs,d,p,kmin,kmax,table,exact=False):
    '''
    The degree contributions (1/k!)sum_{|kappa|=k,l(kappa)<=p} C_kappa(A)C_kappa(Sigma)/C_kappa(I_d) of the matrix Bingham series.

    Parameters
    ----------
    aeigs,seigs : list of float or Fraction
        The spectra of A and Sigma.
    d,p : int
        The dimensions.
    kmin,kmax : int
        The range of the degrees, both ends included.
    table : ZonalTable
        The zonal table.
    exact : logical, optional
        True for rational arithmetic.

    Returns
    -------
    list of float or Fraction
        The contributions.
    '''
    monoa,monos,result=dict(),dict(),[]
    for k in range(kmin,kmax+1):
        terms=[]
        for kappa in table.kappas(k,p):
            ca=evalzonal(kappa,aeigs,table,monoa)
            if ca==0: continue
            cs=evalzonal(kappa,seigs,table,monos)
            terms.append(ca*cs/unitvalue(kappa,d) if exact else ca*cs/float(unitvalue(kappa,d)))
        result.append(sum(terms,Fraction(0))/factorial(k) if exact else math.fsum(terms)/factorial(k))
    return result

def psiterms(leigs,d,p,kmin,kmax,table,exact=False):
    '''
    The degree contributions (1/k!)sum_{|kappa|=k,l(kappa)<=p} C_kappa(B'B/4)/(d/2)_kappa of the matrix Langevin series.

    Parameters
    ----------
    leigs : list of float or Fraction
        The spectrum of B'B/4.
    d,p : int
        The dimensions.
    kmin,kmax : int
        The range of the degrees, both ends included.
    table : ZonalTable
        The zonal table.
    exact : logical, optional
        True for rational arithmetic.

    Returns
    -------
    list of float or Fraction
        The contributions.
    '''
    monos,result=dict(),[]
    for k in range(kmin,kmax+1):
        terms=[]
        for kappa in table.kappas(k,p):
            value=evalzonal(kappa,leigs,table,monos)
            factor=partitionalshiftedfactorial(Fraction(d,2),kappa)
            terms.append(value/factor if exact else value/float(factor))
        result.append(sum(terms,Fraction(0))/factorial(k) if exact else math.fsum(terms)/factorial(k))
    return result

def _total_(terms,exact):
    return sum(terms,Fraction(0)) if exact else math.fsum(terms)

def phitruncated(A,Sigma,params,table=None):
    '''
    The truncated matrix Bingham constant, i.e. the degrees 0,...,m-1 of 1F1(p/2;d/2;A,Sigma) in two matrix arguments.

    Parameters
    ----------
    A : SymmetricMatrix
        The p*p parameter matrix.
    Sigma : SymmetricMatrix
        The d*d parameter matrix.
    params : SeriesParams
        The parameters of the series.
    table : ZonalTable, optional
        The zonal table, which must cover degree m-1 at length p. Built on the fly when omitted.

    Returns
    -------
    ApproxReport
        The report without bounds.
    '''
    _checkorder_(A,params.p,'A','phitruncated')
    _checkorder_(Sigma,params.d,'Sigma','phitruncated')
    table=seriestable('phi',params,params.m-1,table)
    terms=phiterms(spectrum(A,params.exact),spectrum(Sigma,params.exact),params.d,params.p,0,params.m-1,table,params.exact)
    return ApproxReport('phi',params,_total_(terms,params.exact),terms)

def psitruncated(B,params,table=None):
    '''
    The truncated matrix Langevin constant, i.e. the degrees 0,...,m-1 of 0F1(d/2;B'B/4).

    Parameters
    ----------
    B : RectMatrix
        The d*p parameter matrix.
    params : SeriesParams
        The parameters of the series.
    table : ZonalTable, optional
        The zonal table, which must cover degree m-1 at length p. Built on the fly when omitted.

    Returns
    -------
    ApproxReport
        The report without bounds.
    '''
    if B.shape!=(params.d,params.p): raise InputError('psitruncated error: B must be %s*%s, got %s*%s.'%((params.d,params.p)+B.shape))
    table=seriestable('psi',params,params.m-1,table)
    terms=psiterms(spectrum(langevingram(B),params.exact),params.d,params.p,0,params.m-1,table,params.exact)
    return ApproxReport('psi',params,_total_(terms,params.exact),terms)

def confluent1f1(p,d,Sigma,m,table=None,exact=False):
    '''
    The truncated confluent hypergeometric function 1F1(p/2;d/2;Sigma), i.e. the matrix Bingham constant at A=I_p.

    Parameters
    ----------
    p,d : int
        The dimensions.
    Sigma : SymmetricMatrix
        The d*d parameter matrix.
    m : int
        The truncation order.
    table : ZonalTable, optional
        The zonal table.
    exact : logical, optional
        True for rational arithmetic.

    Returns
    -------
    float or Fraction
        The sum over the degrees 0,...,m-1 of (1/k!)sum_{|kappa|=k,l(kappa)<=p} ((p/2)_kappa/(d/2)_kappa)C_kappa(Sigma).
    '''
    params=SeriesParams(d,p,m,mode='exact' if exact else 'floating')
    _checkorder_(Sigma,d,'Sigma','confluent1f1')
    table=seriestable('phi',params,m-1,table)
    seigs,monos,result=spectrum(Sigma,exact),dict(),[]
    for k in range(m):
        terms=[]
        for kappa in table.kappas(k,p):
            ratio=partitionalshiftedfactorial(Fraction(p,2),kappa)/partitionalshiftedfactorial(Fraction(d,2),kappa)
            value=evalzonal(kappa,seigs,table,monos)
            terms.append(ratio*value if exact else float(ratio)*value)
        result.append(_total_(terms,exact)/factorial(k))
    return _total_(result,exact)

def scalar1f2(b,c,x):
    '''
    The scalar hypergeometric function 1F2(1;b,c;x)=sum_k x^k/((b)_k(c)_k).

    Parameters
    ----------
    b,c : float
        The lower parameters, which must not be nonpositive integers.
    x : float
        The argument.

    Returns
    -------
    float
        The value.
    '''
    for a in (b,c):
        if a<=0 and a==int(a): raise DomainError('scalar1f2 error: lower parameter(%s) must not be a nonpositive integer.'%a)
    with mpmath.workdps(DPS):
        result=float(mpmath.hyp1f2(1,b,c,x))
    if not np.isfinite(result): raise ResourceError('scalar1f2 error: overflow at x=%s.'%x)
    return result
