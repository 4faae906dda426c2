'''
--------------------
Reference remainders
--------------------

Certified reference values of the remainders of the truncated series, including:
    * constants: CERTRATIO, KSTEP
    * functions: phiremainder, psiremainder
'''

__all__=['CERTRATIO','KSTEP','phiremainder','psiremainder']

import math
from ..Basics import InputError,ResourceError
from ..Misc import langevingram,frobenius
from ..Zonal import ZonalTable
from ..Series import seriestable,spectrum,phiterms,psiterms
from .Bounds import phi_tail_certified,psi_tail_certified

CERTRATIO=10**-3
KSTEP=4

def _interval_(kind,params,table,cache,terms,pad,where):
    '''
    Sum the degrees m,...,kmax and pad the tail, raising kmax by KSTEP up to the cap of the zonal tables until the pad is below CERTRATIO times the partial tail.
    '''
    evallen=params.d if kind=='phi' else params.p
    kmax,kmin,contributions=max(params.kmax,params.m),params.m,[]
    while True:
        if table is None or not table.covers(kmax,params.p,evallen): table=seriestable(kind,params,kmax,cache=cache)
        contributions.extend(float(term) for term in terms(kmin,kmax,table))
        partial,tail=math.fsum(contributions),pad(kmax+1)
        if tail==0: return partial,0.0
        if tail<CERTRATIO*abs(partial): return partial+tail/2,tail/2
        if kmax>=ZonalTable.CAP:
            raise ResourceError('%s error: the tail pad(%.3e) after degree %s is not below %.0e times the partial tail(%.3e) at the cap of the zonal tables.'%(where,tail,kmax,CERTRATIO,partial))
        kmin,kmax=kmax+1,min(kmax+KSTEP,ZonalTable.CAP)

def phiremainder(A,Sigma,params,table=None,cache=None):
    '''
    The reference remainder of the truncated matrix Bingham constant, as a certified interval.

    Parameters
    ----------
    A : SymmetricMatrix
        The p*p parameter matrix.
    Sigma : SymmetricMatrix
        The d*d parameter matrix.
    params : SeriesParams
        The parameters of the series.
    table : ZonalTable, optional
        The zonal table. A larger one is built when it cannot cover the degrees the certification needs.
    cache : None, True or str, optional
        The cache argument of the tables built on demand.

    Returns
    -------
    value : float
        The midpoint of the interval, i.e. the sum of the degrees m,...,k plus half the tail pad, where k>=kmax is the first degree that certifies.
    radius : float
        The radius of the interval, i.e. half the tail pad.
    '''
    if A.n!=params.p or Sigma.n!=params.d: raise InputError('phiremainder error: A and Sigma must be %s*%s and %s*%s.'%(params.p,params.p,params.d,params.d))
    if frobenius(A)==0 or frobenius(Sigma)==0: return 0.0,0.0
    aeigs,seigs=spectrum(A),spectrum(Sigma)
    terms=lambda kmin,kmax,table: phiterms(aeigs,seigs,params.d,params.p,kmin,kmax,table)
    pad=lambda k: phi_tail_certified(k,A,Sigma,params.d,params.p)
    return _interval_('phi',params,table,cache,terms,pad,'phiremainder')

def psiremainder(B,params,table=None,cache=None):
    '''
    The reference remainder of the truncated matrix Langevin constant, as a certified interval.

    Parameters
    ----------
    B : RectMatrix
        The d*p parameter matrix.
    params : SeriesParams
        The parameters of the series.
    table : ZonalTable, optional
        The zonal table. A larger one is built when it cannot cover the degrees the certification needs.
    cache : None, True or str, optional
        The cache argument of the tables built on demand.

    Returns
    -------
    value : float
        The midpoint of the interval.
    radius : float
        The radius of the interval.
    '''
    if B.shape!=(params.d,params.p): raise InputError('psiremainder error: B must be %s*%s, got %s*%s.'%((params.d,params.p)+B.shape))
    if frobenius(B)==0: return 0.0,0.0
    leigs=spectrum(langevingram(B))
    terms=lambda kmin,kmax,table: psiterms(leigs,params.d,params.p,kmin,kmax,table)
    pad=lambda k: psi_tail_certified(k,B,params.d,params.p)
    return _interval_('psi',params,table,cache,terms,pad,'psiremainder')
