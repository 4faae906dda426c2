'''
------------------
Inequality checks
------------------

Executable checks of the inequalities behind the remainder bounds, including:
    * constants: SEED, NSAMPLE, SLACK
    * classes: CheckResult
    * functions: checkfactorial, checkpochhammer, checkratio, checkabs, checkzonalupper, checkfk, spikedspectrum, checkzonallower,
      checkscalartightness, tightnesssweep, suite, summary
'''

__all__=[   'SEED','NSAMPLE','SLACK','CheckResult',
            'checkfactorial','checkpochhammer','checkratio','checkabs','checkzonalupper','checkfk','spikedspectrum','checkzonallower',
            'checkscalartightness','tightnesssweep','suite','summary'
            ]

from fractions import Fraction
from collections import OrderedDict
from math import factorial,prod
import numpy as np
import mpmath
from ..Basics import DomainError,Sheet,floattostr,mpirun
from ..Misc import SymmetricMatrix,RandomStream,eigensym,frobenius
from ..Zonal import Partition,partitions,partitionalshiftedfactorial,unitvalue,evalzonal,zonaltable
from ..Bounds import GAMMA1,alpha_p,n_dim

SEED=42
NSAMPLE=200
SLACK=10**-12
DPS=50

class CheckResult(object):
    '''
    The result of a check of an inequality lhs<=rhs.

    Attributes
    ----------
    name : str
        The name of the check.
    lhs,rhs : float or Fraction
        The two sides.
    passed : logical
        True for lhs<=rhs+SLACK*max(1,|rhs|).
    witness : str
        The description of the input.
    '''

    def __init__(self,name,lhs,rhs,witness=''):
        '''
        Constructor.
        '''
        self.name=name
        self.lhs=lhs
        self.rhs=rhs
        self.witness=witness
        if isinstance(lhs,(int,Fraction)) and isinstance(rhs,(int,Fraction)):
            self.passed=lhs<=rhs
        else:
            self.passed=bool(float(lhs)<=float(rhs)+SLACK*max(1.0,abs(float(rhs))))

    @property
    def margin(self):
        '''
        The margin rhs-lhs.
        '''
        return self.rhs-self.lhs

    def tojson(self):
        '''
        The json object of the result.
        '''
        return OrderedDict([('name',self.name),('passed',self.passed),('lhs',float(self.lhs)),('rhs',float(self.rhs)),('margin',float(self.margin)),('witness',self.witness)])

    def __repr__(self):
        '''
        Convert an instance to string.
        '''
        return '%s(%s): %s<=%s %s'%(self.name,self.witness,floattostr(float(self.lhs)),floattostr(float(self.rhs)),'passed' if self.passed else 'FAILED')

def checkfactorial(a,p):
    '''
    Check prod_i (p*a_i)! <= alpha_p^(2p)*p^(p*sum(a))*(sum(a)!)^p, exactly on the left and with 50 digits on the right.

    Parameters
    ----------
    a : tuple of int
        The nonnegative integers, with a sum of at least 2.
    p : int
        The integer p.

    Returns
    -------
    CheckResult
        The result.
    '''
    if sum(a)<2 or any(x<0 for x in a): raise DomainError('checkfactorial error: nonnegative integers with a sum of at least 2 are required, got %s.'%(tuple(a),))
    lhs=prod(factorial(p*x) for x in a)
    with mpmath.workdps(DPS):
        rhs=mpmath.power(mpmath.mpf(2)*mpmath.pi,-mpmath.mpf(p-1)/2)*mpmath.power(p,mpmath.mpf(1)/2)*mpmath.power(p,p*sum(a))*mpmath.factorial(sum(a))**p
        passed=mpmath.mpf(lhs)<=rhs
    result=CheckResult('factorial',float(lhs),float(rhs),'a=%s,p=%s'%(tuple(a),p))
    result.passed=bool(passed)
    return result

def checkpochhammer(kappa,d,p):
    '''
    Check (2p)^(-|kappa|)*d^|kappa| <= (d/2)_kappa <= 2^(-|kappa|)*(d+|kappa|)^|kappa| in rational arithmetic.

    Parameters
    ----------
    kappa : Partition
        The partition, with a weight of at least 2.
    d,p : int
        The dimensions, with d>=p>=l(kappa).

    Returns
    -------
    lower,upper : CheckResult
        The results of the two sides.
    '''
    kappa=Partition(kappa)
    k=kappa.weight
    if k<2: raise DomainError('checkpochhammer error: the weight of %s must be at least 2.'%(kappa,))
    if not d>=p>=kappa.length: raise DomainError('checkpochhammer error: d>=p>=l(kappa) is required, got d=%s, p=%s, kappa=%s.'%(d,p,kappa))
    value=partitionalshiftedfactorial(Fraction(d,2),kappa)
    witness='kappa=%s,d=%s,p=%s'%(kappa,d,p)
    return CheckResult('pochhammer_lower',Fraction(d**k,(2*p)**k),value,witness),CheckResult('pochhammer_upper',value,Fraction((d+k)**k,2**k),witness)

def _ratio_(r,d):
    return mpmath.rf(mpmath.sqrt(d)/2,r)/mpmath.rf(mpmath.mpf(d)/2,r)

def _ratioproduct_(kappa,d,p):
    return mpmath.fprod(_ratio_(p*part,d) for part in Partition(kappa).padded(p))

def checkratio(kappa,d,p):
    '''
    Check the bound of the product of the ratios (d^(1/2)/2)_(p*kappa_i)/(d/2)_(p*kappa_i) and the bounds of the ratios themselves.

    Parameters
    ----------
    kappa : Partition
        The partition, with a weight of at least 2.
    d,p : int
        The dimensions, with d>=p>=l(kappa).

    Returns
    -------
    product : CheckResult
        The result of the product bound [alpha_p*(|kappa|!)^(1/2)*gamma1^|kappa|*p^(|kappa|/2)*d^(-|kappa|/2)]^p.
    scalar : CheckResult
        The result of the scalar bound (r!)^(1/2)*gamma1^r*d^(-r/2) with the smallest relative margin over r=p*kappa_i.
    '''
    kappa=Partition(kappa)
    k=kappa.weight
    if k<2: raise DomainError('checkratio error: the weight of %s must be at least 2.'%(kappa,))
    if not d>=p>=kappa.length: raise DomainError('checkratio error: d>=p>=l(kappa) is required, got d=%s, p=%s, kappa=%s.'%(d,p,kappa))
    witness='kappa=%s,d=%s,p=%s'%(kappa,d,p)
    with mpmath.workdps(DPS):
        lhs=_ratioproduct_(kappa,d,p)
        rhs=(alpha_p(p)*mpmath.sqrt(mpmath.factorial(k))*mpmath.mpf(GAMMA1)**k*mpmath.power(p,mpmath.mpf(k)/2)*mpmath.power(d,-mpmath.mpf(k)/2))**p
        product=CheckResult('ratio_product',float(lhs),float(rhs),witness)
        scalars=[]
        for part in kappa.padded(p):
            r=p*part
            scalars.append((_ratio_(r,d),mpmath.sqrt(mpmath.factorial(r))*mpmath.mpf(GAMMA1)**r*mpmath.power(d,-mpmath.mpf(r)/2),r))
        slhs,srhs,r=max(scalars,key=lambda item: item[0]/item[1])
    return product,CheckResult('ratio_scalar',float(slhs),float(srhs),'r=%s,d=%s'%(r,d))

def checkabs(kappa,Sigma,table):
    '''
    Check |C_kappa(Sigma)| <= C_kappa(Sigma_+), with Sigma_+ the matrix of the absolute eigenvalues.

    Parameters
    ----------
    kappa : Partition
        The partition.
    Sigma : SymmetricMatrix
        The matrix.
    table : ZonalTable
        The zonal table covering kappa.

    Returns
    -------
    CheckResult
        The result.
    '''
    eigs=eigensym(Sigma).values
    lhs=abs(evalzonal(kappa,[float(x) for x in eigs],table))
    rhs=evalzonal(kappa,[abs(float(x)) for x in eigs],table)
    return CheckResult('abs',lhs,rhs,'kappa=%s,eigs=%s'%(Partition(kappa),np.round(eigs,6).tolist()))

def _zonalbound_(kappa,d,p,norm):
    with mpmath.workdps(DPS):
        factor=mpmath.power(_ratioproduct_(kappa,d,p),mpmath.mpf(1)/p)
        return float(factor*mpmath.mpf(unitvalue(kappa,d).numerator)/unitvalue(kappa,d).denominator*mpmath.mpf(norm)**Partition(kappa).weight)

def checkzonalupper(kappa,Sigma,p,table):
    '''
    Check |C_kappa(Sigma)| <= (prod_i (d^(1/2)/2)_(p*kappa_i)/(d/2)_(p*kappa_i))^(1/p)*C_kappa(I_d)*||Sigma||^|kappa|.

    Parameters
    ----------
    kappa : Partition
        The partition, with l(kappa)<=p.
    Sigma : SymmetricMatrix
        The d*d matrix.
    p : int
        The integer p, with p<=d.
    table : ZonalTable
        The zonal table covering kappa.

    Returns
    -------
    CheckResult
        The result.
    '''
    kappa,d=Partition(kappa),Sigma.n
    if not d>=p>=kappa.length: raise DomainError('checkzonalupper error: d>=p>=l(kappa) is required, got d=%s, p=%s, kappa=%s.'%(d,p,kappa))
    eigs=[float(x) for x in eigensym(Sigma).values]
    lhs=abs(evalzonal(kappa,eigs,table))
    return CheckResult('zonal_upper',lhs,_zonalbound_(kappa,d,p,frobenius(Sigma)),'kappa=%s,d=%s,p=%s'%(kappa,d,p))

def _positivespectrum_(Sigma,where):
    eigs=[float(x) for x in eigensym(Sigma).values]
    if not eigs[-1]>0: raise DomainError('%s error: Sigma is not positive definite(smallest eigenvalue %s).'%(where,eigs[-1]))
    return eigs

def checkfk(kappa,Sigma,table):
    '''
    Check C_kappa(Sigma) <= C_kappa(I_d)*prod_j sigma_(j)^kappa_j for positive definite Sigma, and compare it with the bound of `checkzonalupper`.

    Parameters
    ----------
    kappa : Partition
        The partition, whose length is taken as p.
    Sigma : SymmetricMatrix
        The d*d positive definite matrix.
    table : ZonalTable
        The zonal table covering kappa.

    Returns
    -------
    result : CheckResult
        The result.
    ratio : float
        The ratio of the right-hand side of `checkzonalupper` to that of this check. Values below 1 mean the former is sharper.
    '''
    kappa,d=Partition(kappa),Sigma.n
    p=kappa.length
    if p<1 or p>d: raise DomainError('checkfk error: 1<=l(kappa)<=d is required, got kappa=%s, d=%s.'%(kappa,d))
    eigs=_positivespectrum_(Sigma,'checkfk')
    lhs=evalzonal(kappa,eigs,table)
    rhs=float(unitvalue(kappa,d))*prod(sigma**part for sigma,part in zip(eigs,kappa))
    return CheckResult('fk',lhs,rhs,'kappa=%s,d=%s'%(kappa,d)),_zonalbound_(kappa,d,p,frobenius(Sigma))/rhs

def spikedspectrum(d,p,sigma=1.0,rho=1.0,r=0.5):
    '''
    The spectrum sigma*d^(r/2) repeated p times followed by rho*d^(-(d-p+1)/2) repeated d-p times.

    Parameters
    ----------
    d,p : int
        The dimensions.
    sigma,rho : float, optional
        The positive scales.
    r : float, optional
        The growth exponent in [0,1).

    Returns
    -------
    SymmetricMatrix
        The diagonal matrix with this spectrum.
    '''
    return SymmetricMatrix(np.diag([sigma*d**(r/2)]*p+[rho*d**(-(d-p+1)/2.0)]*(d-p)))

def checkzonallower(kappa,Sigma,table):
    '''
    Check (1+|kappa|)^(-N_d)*C_kappa(I_d)*prod_j sigma_(j)^kappa_j <= C_kappa(Sigma) for positive definite Sigma.

    Parameters
    ----------
    kappa : Partition
        The partition, whose length is taken as p.
    Sigma : SymmetricMatrix
        The d*d positive definite matrix.
    table : ZonalTable
        The zonal table covering kappa.

    Returns
    -------
    CheckResult
        The result.
    '''
    kappa,d=Partition(kappa),Sigma.n
    if kappa.length<1 or kappa.length>d: raise DomainError('checkzonallower error: 1<=l(kappa)<=d is required, got kappa=%s, d=%s.'%(kappa,d))
    eigs=_positivespectrum_(Sigma,'checkzonallower')
    lhs=float(unitvalue(kappa,d))*prod(sigma**part for sigma,part in zip(eigs,kappa))/(1+kappa.weight)**n_dim(d)
    return CheckResult('zonal_lower',lhs,evalzonal(kappa,eigs,table),'kappa=%s,d=%s'%(kappa,d))

def _tightness_(kappa,d,p):
    with mpmath.workdps(DPS):
        return mpmath.power(_ratioproduct_(kappa,d,p),mpmath.mpf(1)/p)*mpmath.power(d,mpmath.mpf(Partition(kappa).weight)/2)

def checkscalartightness(kappa,d,p):
    '''
    Check 1 <= (prod_i (d^(1/2)/2)_(p*kappa_i)/(d/2)_(p*kappa_i))^(1/p)*d^(|kappa|/2), i.e. the bound of `checkzonalupper` at the scalar matrices.

    Parameters
    ----------
    kappa : Partition
        The partition.
    d,p : int
        The dimensions, with d>=p>=l(kappa).

    Returns
    -------
    CheckResult
        The result, whose rhs is the tightness ratio.
    '''
    kappa=Partition(kappa)
    if not d>=p>=kappa.length: raise DomainError('checkscalartightness error: d>=p>=l(kappa) is required, got d=%s, p=%s, kappa=%s.'%(d,p,kappa))
    return CheckResult('scalar_tightness',1.0,float(_tightness_(kappa,d,p)),'kappa=%s,d=%s,p=%s'%(kappa,d,p))

def tightnesssweep(kappa,p,jmin=1,jmax=10):
    '''
    The tightness ratios of `checkscalartightness` along d=2^j.

    Parameters
    ----------
    kappa : Partition
        The partition.
    p : int
        The integer p.
    jmin,jmax : int, optional
        The range of j, both ends included.

    Returns
    -------
    list of (int,float)
        The dimensions and the ratios.
    '''
    return [(2**j,float(_tightness_(kappa,2**j,p))) for j in range(jmin,jmax+1) if 2**j>=p]

def _randomsymmetric_(stream,d,definite):
    g=stream.normal((d,d))
    return SymmetricMatrix(g.dot(g.T)/d+0.1*np.eye(d) if definite else (g+g.T)/2)

def _instance_(index,seed,maxweight,dims):
    stream=RandomStream(seed,index)
    d=int(dims[int(stream.uniform(1)[0]*len(dims))])
    p=1+int(stream.uniform(1)[0]*d)
    k=1+int(stream.uniform(1)[0]*maxweight)
    kappas=partitions(k,p)
    return stream,d,p,kappas[int(stream.uniform(1)[0]*len(kappas))]

def _job_(name,index,seed,maxweight,dims,table):
    stream,d,p,kappa=_instance_(index,seed,maxweight,dims)
    if name=='abs':
        return [checkabs(kappa,_randomsymmetric_(stream,d,False),table)]
    if name=='zonal_upper':
        return [checkzonalupper(kappa,_randomsymmetric_(stream,d,False),p,table)]
    if name=='fk':
        kappa=Partition(kappa)
        return [checkfk(kappa,_randomsymmetric_(stream,d,True),table)[0]]
    if name=='zonal_lower':
        return [checkzonallower(kappa,_randomsymmetric_(stream,d,True),table)]
    if kappa.weight<2: kappa=Partition((2,))
    if name=='pochhammer':
        return list(checkpochhammer(kappa,d,max(p,kappa.length)))
    if name=='ratio':
        return list(checkratio(kappa,d,max(p,kappa.length)))
    if name=='scalar_tightness':
        return [checkscalartightness(kappa,d,max(p,kappa.length))]
    if name=='factorial':
        a=[int(x) for x in np.floor(stream.uniform(p)*(maxweight+1))]
        if sum(a)<2: a[0]+=2
        return [checkfactorial(a,p)]
    raise ValueError('_job_ error: not supported check(%s).'%name)

def suite(maxweight=4,dims=(2,3,4,6,8),seed=SEED,count=NSAMPLE,log=None):
    '''
    Run every check on a seeded random sweep.

    Parameters
    ----------
    maxweight : int, optional
        The maximum weight of the random partitions.
    dims : tuple of int, optional
        The dimensions d to sample from.
    seed : int, optional
        The seed.
    count : int, optional
        The number of the random instances per check.
    log : Log, optional
        The log of the failures.

    Returns
    -------
    OrderedDict of str -> list of CheckResult
        The results grouped by the names of the checks, in name order.
    '''
    if maxweight<1 or not dims or min(dims)<1: raise DomainError('suite error: maxweight>=1 and positive dims are required.')
    table=zonaltable(maxweight,max(dims),evallen=max(dims))
    names=['abs','factorial','fk','pochhammer','ratio','scalar_tightness','zonal_lower','zonal_upper']
    jobs=[(name,names.index(name)*count+i,seed,maxweight,tuple(dims),table) for name in names for i in range(count)]
    results=OrderedDict()
    for batch in mpirun(_job_,jobs):
        for result in batch:
            results.setdefault(result.name,[]).append(result)
            if log is not None and not result.passed: log<<'%r\n'%result
    return OrderedDict((name,results[name]) for name in sorted(results))

def summary(results):
    '''
    The text summary of the results of `suite`.
    '''
    sheet=Sheet(cols=('count','passed','min margin'),rows=list(results.keys()),corner='check')
    for name,group in results.items():
        sheet[(name,'count')]=str(len(group))
        sheet[(name,'passed')]=str(sum(result.passed for result in group))
        sheet[(name,'min margin')]=floattostr(min(float(result.margin) for result in group))
    return sheet.tostr()
