'''
----------------
Remainder bounds
----------------

Certified upper and lower bounds of the remainders of the truncated normalizing constants, including:
    * constants: GAMMA1
    * classes: GrowthParams, BoundReport, Selection
    * functions: alpha_p, gamma1, c_m, n_dim, r_m_series, r_m_closed, t_phi, t_psi, d_phi, d_psi, m_decreasing_threshold,
      check_growth, phi_upper, phi_tail_certified, phi_lower, phi_lower_poisson, phi_lower_normal, phi_lower_asymptotic,
      psi_upper, psi_tail_certified, psi_lower, select_m
'''

__all__=[   'GAMMA1','GrowthParams','BoundReport','Selection',
            'alpha_p','gamma1','c_m','n_dim','r_m_series','r_m_closed','t_phi','t_psi','d_phi','d_psi','m_decreasing_threshold',
            'check_growth','phi_upper','phi_tail_certified','phi_lower','phi_lower_poisson','phi_lower_normal','phi_lower_asymptotic',
            'psi_upper','psi_tail_certified','psi_lower','select_m'
            ]

import numpy as np
import math
from collections import OrderedDict
from scipy.special import gammaln,logsumexp,log_ndtr
from scipy.stats import poisson
from ..Basics import RZERO,DomainError,ResourceError,Sheet,floattostr
from ..Misc import SymmetricMatrix,RectMatrix,eigensym,frobenius,langevingram
from ..Series import scalar1f2

GAMMA1=(math.sqrt(3.0)+1)/2
LOGMAX=math.log(np.finfo(np.float64).max)

class GrowthParams(object):
    '''
    The growth parameters of the norm of the parameter matrix with the dimension, i.e. ||Sigma||<=gamma0*d^(r/2) or ||B||<=2*gamma0^(1/2)*d^(r/4).

    Attributes
    ----------
    gamma0 : float
        The prefactor.
    r : float
        The exponent.
    '''

    def __init__(self,gamma0=1.0,r=0.0):
        '''
        Constructor.

        Parameters
        ----------
        gamma0 : float, optional
            The prefactor.
        r : float, optional
            The exponent.
        '''
        if not gamma0>=0: raise DomainError('GrowthParams error: gamma0(%s) must be nonnegative.'%gamma0)
        self.gamma0=float(gamma0)
        self.r=float(r)

    def inrange(self,kind):
        '''
        Judge whether r lies in the range where the rates of the bounds are guaranteed, i.e. [0,1) for 'phi' and [0,3) for 'psi'.
        '''
        assert kind in ('phi','psi')
        return 0<=self.r<(1 if kind=='phi' else 3)

    def __repr__(self):
        '''
        Convert an instance to string.
        '''
        return 'GrowthParams(gamma0=%s,r=%s)'%(self.gamma0,self.r)

class BoundReport(object):
    '''
    The report of the bounds of a remainder.

    Attributes
    ----------
    kind : 'phi' or 'psi'
        The kind of the normalizing constant.
    m,d,p : int
        The truncation order and the dimensions.
    t : float
        The abscissa fed to R_m.
    upper_series,upper_closed : float
        The upper bounds by the series R_m and by its closed form, natural logarithms when `log` is True.
    lower : float or None
        The lower bound.
    constants : OrderedDict
        The constants alpha_p, gamma1, c_m and N.
    flags : OrderedDict
        The validity flags, i.e. whether the growth condition is satisfied and whether r is in range.
    log : logical
        True for the bounds reported as natural logarithms.
    '''

    def __init__(self,kind,m,d,p,t,upper_series,upper_closed,lower=None,constants=(),flags=(),log=False):
        '''
        Constructor.
        '''
        self.kind=kind
        self.m=m
        self.d=d
        self.p=p
        self.t=t
        self.upper_series=upper_series
        self.upper_closed=upper_closed
        self.lower=lower
        self.constants=OrderedDict(constants)
        self.flags=OrderedDict(flags)
        self.log=log

    def tojson(self):
        '''
        The json object of the report.
        '''
        result=OrderedDict()
        result['kind']=self.kind
        result['m'],result['d'],result['p']=self.m,self.d,self.p
        result['t']=self.t
        result['upper_series']=self.upper_series
        result['upper_closed']=self.upper_closed
        result['lower']=self.lower
        result['log']=self.log
        result['constants']=self.constants
        result['flags']=self.flags
        return result

    def tostr(self):
        '''
        The text representation of the report.
        '''
        tags=['t','upper_series','upper_closed','lower']+list(self.constants.keys())+list(self.flags.keys())
        sheet=Sheet(cols=('value',),rows=tags,corner='%s(m=%s,d=%s,p=%s)'%(self.kind,self.m,self.d,self.p))
        for tag in ('t','upper_series','upper_closed','lower'): sheet[tag]=floattostr(getattr(self,tag))
        for tag,value in self.constants.items(): sheet[tag]=floattostr(value) if isinstance(value,float) else str(value)
        for tag,value in self.flags.items(): sheet[tag]=str(value)
        return sheet.tostr()

    def __str__(self):
        '''
        Convert an instance to string.
        '''
        return self.tostr()

class Selection(object):
    '''
    The result of the selection of the truncation order.

    Attributes
    ----------
    found : logical
        True when some m qualifies.
    m : int or None
        The smallest qualifying m.
    bound : float or None
        The closed-form bound at m.
    minimum : float
        The minimum bound achieved over the scanned range.
    argmin : int
        The m achieving the minimum.
    '''

    def __init__(self,found,m,bound,minimum,argmin):
        '''
        Constructor.
        '''
        self.found=found
        self.m=m
        self.bound=bound
        self.minimum=minimum
        self.argmin=argmin

    def __repr__(self):
        '''
        Convert an instance to string.
        '''
        return 'Selection(found=%s,m=%s,bound=%s,minimum=%s,argmin=%s)'%(self.found,self.m,self.bound,self.minimum,self.argmin)

def alpha_p(p):
    '''
    The constant (2*pi)^(-(p-1)/(4p))*p^(1/(4p)).
    '''
    if p<1: raise DomainError('alpha_p error: p(%s) must be positive.'%p)
    return (2*math.pi)**(-(p-1)/(4.0*p))*p**(1.0/(4*p))

def gamma1():
    '''
    The constant (sqrt(3)+1)/2.
    '''
    return GAMMA1

def c_m(m):
    '''
    The constant (1+1/m)^(-m)*e.
    '''
    if m<1: raise DomainError('c_m error: m(%s) must be positive.'%m)
    return math.exp(1.0-m*math.log1p(1.0/m))

def n_dim(n):
    '''
    The integer (n+2)(n-1)/2.
    '''
    if n<1: raise DomainError('n_dim error: n(%s) must be positive.'%n)
    return (n+2)*(n-1)//2

def _logtail_(logterm,m,chunk=256):
    '''
    The log of the sum over k>=m of the terms exp(logterm(k)), for log-concave terms.
    '''
    logs,best,k0=[],-np.inf,m
    while True:
        ks=np.arange(k0,k0+chunk,dtype=np.float64)
        values=logterm(ks)
        logs.append(values)
        best=max(best,float(values.max()))
        if values[-1]<values[-2] and values[-1]<best-40: break
        k0+=chunk
    return float(logsumexp(np.concatenate(logs)))

def _output_(logvalue,log,where):
    if log: return logvalue
    if logvalue>LOGMAX: raise ResourceError('%s error: overflow(log value %.6e), use the log output instead.'%(where,logvalue))
    return math.exp(logvalue)

def r_m_series(m,t,log=False):
    '''
    The series R_m(t)=sum_{k>=m} t^k/(k!)^(1/2), summed in log space to the relative tolerance 1e-15.

    Parameters
    ----------
    m : int
        The starting degree.
    t : float
        The abscissa.
    log : logical, optional
        True for the natural logarithm of the result.

    Returns
    -------
    float
        The series.
    '''
    if m<1 or t<0: raise DomainError('r_m_series error: m>=1 and t>=0 are required, got m=%s, t=%s.'%(m,t))
    if t==0: return -np.inf if log else 0.0
    lt=math.log(t)
    return _output_(_logtail_(lambda ks: ks*lt-0.5*gammaln(ks+1),m),log,'r_m_series')

def r_m_closed(m,t,log=False):
    '''
    The closed-form bound (4e/pi)^(1/4)*(e/m)^(m/2-1/4)*t^m*exp(c_m*t^2/2) of R_m(t).

    Parameters
    ----------
    m : int
        The starting degree, at least 2.
    t : float
        The abscissa.
    log : logical, optional
        True for the natural logarithm of the result.

    Returns
    -------
    float
        The closed-form bound.
    '''
    if m<2: raise DomainError('r_m_closed error: m(%s) must be at least 2.'%m)
    if t<0: raise DomainError('r_m_closed error: t(%s) must be nonnegative.'%t)
    if t==0: return -np.inf if log else 0.0
    logvalue=0.25*math.log(4*math.e/math.pi)+(m/2.0-0.25)*(1-math.log(m))+m*math.log(t)+c_m(m)*t**2/2
    return _output_(logvalue,log,'r_m_closed')

def _spectrum_(M):
    return eigensym(M if isinstance(M,SymmetricMatrix) else SymmetricMatrix(M)).values

def _trplus_(A):
    return float(np.sum(np.abs(_spectrum_(A))))

def t_phi(A,d,p,g):
    '''
    The abscissa gamma0*gamma1*p^(1/2)*tr(A_+)*d^(-(1-r)/2) of the Bingham bound.

    Parameters
    ----------
    A : SymmetricMatrix
        The p*p parameter matrix.
    d,p : int
        The dimensions.
    g : GrowthParams
        The growth parameters.

    Returns
    -------
    float
        The abscissa.
    '''
    if not d>=p>=1: raise DomainError('t_phi error: d>=p>=1 is required, got d=%s, p=%s.'%(d,p))
    return g.gamma0*GAMMA1*math.sqrt(p)*_trplus_(A)*d**(-(1-g.r)/2)

def t_psi(d,p,g):
    '''
    The abscissa 2*gamma0*gamma1*p^(5/2)*d^(-(3-r)/2) of the Langevin bound.

    Parameters
    ----------
    d,p : int
        The dimensions.
    g : GrowthParams
        The growth parameters.

    Returns
    -------
    float
        The abscissa.
    '''
    if not d>=p>=1: raise DomainError('t_psi error: d>=p>=1 is required, got d=%s, p=%s.'%(d,p))
    return 2*g.gamma0*GAMMA1*p**2.5*d**(-(3-g.r)/2)

def d_phi(t,A,p,g):
    '''
    The dimension d at which the Bingham abscissa equals t, i.e. the inverse of `t_phi` in d.
    '''
    if not t>0 or not g.r<1: raise DomainError('d_phi error: t>0 and r<1 are required, got t=%s, r=%s.'%(t,g.r))
    return (g.gamma0*GAMMA1*math.sqrt(p)*_trplus_(A)/t)**(2/(1-g.r))

def d_psi(t,p,g):
    '''
    The dimension d at which the Langevin abscissa equals t, i.e. the inverse of `t_psi` in d.
    '''
    if not t>0 or not g.r<3: raise DomainError('d_psi error: t>0 and r<3 are required, got t=%s, r=%s.'%(t,g.r))
    return (2*g.gamma0*GAMMA1*p**2.5/t)**(2/(3-g.r))

def m_decreasing_threshold(kind,p,g,A=None):
    '''
    The dimension beyond which the abscissa drops below 1, so that the closed-form bound is strictly decreasing in m.

    Parameters
    ----------
    kind : 'phi' or 'psi'
        The kind of the normalizing constant.
    p : int
        The number of columns.
    g : GrowthParams
        The growth parameters.
    A : SymmetricMatrix, optional
        The Bingham parameter matrix, required when kind is 'phi'.

    Returns
    -------
    float
        The threshold dimension.
    '''
    assert kind in ('phi','psi')
    return d_phi(1.0,A,p,g) if kind=='phi' else d_psi(1.0,p,g)

def check_growth(M,d,g,kind):
    '''
    Check the growth condition of the parameter matrix.

    Parameters
    ----------
    M : SymmetricMatrix or RectMatrix
        Sigma for 'phi' and B for 'psi'.
    d : int
        The dimension.
    g : GrowthParams
        The growth parameters.
    kind : 'phi' or 'psi'
        The kind of the normalizing constant.

    Returns
    -------
    satisfied : logical
        True for ||Sigma||<=gamma0*d^(r/2) (resp. ||B||<=2*gamma0^(1/2)*d^(r/4)).
    minimal : float
        The minimal gamma0 making the condition hold at the given r.
    '''
    assert kind in ('phi','psi')
    norm=frobenius(M)
    if kind=='phi':
        minimal=norm/d**(g.r/2)
    else:
        minimal=(norm/(2*d**(g.r/4)))**2
    return minimal<=g.gamma0*(1+RZERO),minimal

def _constants_(m,p,n):
    return OrderedDict([('alpha_p',alpha_p(p)),('gamma1',GAMMA1),('c_m',c_m(m)),('N',n_dim(n))])

def _upper_(kind,m,t,p,log):
    la=math.log(alpha_p(p))
    series=la+r_m_series(m,t,log=True)
    closed=la+r_m_closed(m,t,log=True)
    return (series,closed) if log else (_output_(series,False,'%s_upper'%kind),_output_(closed,False,'%s_upper'%kind))

def phi_upper(m,A,d,p,g,Sigma=None,log=False):
    '''
    The upper bounds of the remainder of the truncated matrix Bingham constant.

    Parameters
    ----------
    m : int
        The truncation order, at least 2.
    A : SymmetricMatrix
        The p*p parameter matrix.
    d,p : int
        The dimensions.
    g : GrowthParams
        The growth parameters.
    Sigma : SymmetricMatrix, optional
        The d*d parameter matrix, against which the growth condition is checked.
    log : logical, optional
        True for the bounds reported as natural logarithms.

    Returns
    -------
    BoundReport
        The report with upper_series=alpha_p*R_m(t) and upper_closed=alpha_p*(closed form of R_m(t)).
    '''
    if m<2: raise DomainError('phi_upper error: m(%s) must be at least 2.'%m)
    t=0.0 if Sigma is not None and frobenius(Sigma)==0 else t_phi(A,d,p,g)
    series,closed=_upper_('phi',m,t,p,log)
    flags=[('growth',None if Sigma is None else check_growth(Sigma,d,g,'phi')[0]),('r_in_range',g.inrange('phi'))]
    return BoundReport('phi',m,d,p,t,series,closed,constants=_constants_(m,p,d),flags=flags,log=log)

def phi_tail_certified(m,A,Sigma,d,p,log=False):
    '''
    The upper bound alpha_p*R_m(gamma1*p^(1/2)*tr(A_+)*||Sigma||*d^(-1/2)) of the Bingham remainder, i.e. the series bound with the minimal growth prefactor of Sigma.

    Parameters
    ----------
    m : int
        The truncation order.
    A : SymmetricMatrix
        The p*p parameter matrix.
    Sigma : SymmetricMatrix
        The d*d parameter matrix.
    d,p : int
        The dimensions.
    log : logical, optional
        True for the natural logarithm of the bound.

    Returns
    -------
    float
        The bound.
    '''
    t=GAMMA1*math.sqrt(p)*_trplus_(A)*frobenius(Sigma)/math.sqrt(d)
    if t==0: return -np.inf if log else 0.0
    logvalue=math.log(alpha_p(p))+r_m_series(m,t,log=True)
    return _output_(logvalue,log,'phi_tail_certified')

def _positive_(M,where):
    values=_spectrum_(M)
    if not values[-1]>0: raise DomainError('%s error: the matrix is not positive definite(smallest eigenvalue %s).'%(where,values[-1]))
    return values

def _bingham_lower_(m,A,Sigma,d,where):
    if m<1: raise DomainError('%s error: m(%s) must be positive.'%(where,m))
    avalues,svalues=_positive_(A,where),_positive_(Sigma,where)
    p=len(avalues)
    if len(svalues)!=d or d<p: raise DomainError('%s error: Sigma must be d*d with d(%s)>=p(%s).'%(where,d,p))
    N=n_dim(d)
    x=float(svalues[p-1])*float(np.sum(avalues))
    logprefactor=m*N*math.log(2+m)-(1+m)*N*math.log(1+m)
    mu=math.exp(N*(math.log(1+m)-math.log(2+m)))*x
    return logprefactor,mu,x,N

def phi_lower(m,A,Sigma,d,p,log=False):
    '''
    The lower bound of the remainder of the truncated matrix Bingham constant, with the prefactor (2+m)^(mN_d)(1+m)^(-(1+m)N_d).

    Parameters
    ----------
    m : int
        The truncation order.
    A : SymmetricMatrix
        The p*p positive definite parameter matrix.
    Sigma : SymmetricMatrix
        The d*d positive definite parameter matrix.
    d,p : int
        The dimensions.
    log : logical, optional
        True for the natural logarithm of the bound.

    Returns
    -------
    float
        The bound prefactor*sum_{k>=m} mu^k/k! with mu=((1+m)/(2+m))^N_d*sigma_(p)*tr(A).
    '''
    logprefactor,mu,_,_=_bingham_lower_(m,A,Sigma,d,'phi_lower')
    if mu==0: return -np.inf if log else 0.0
    lm=math.log(mu)
    return _output_(logprefactor+_logtail_(lambda ks: ks*lm-gammaln(ks+1),m),log,'phi_lower')

def phi_lower_poisson(m,A,Sigma,d,p,log=False):
    '''
    The Poisson form prefactor*e^mu*P(W>=m) of `phi_lower`, where W is Poisson with the parameter mu.
    '''
    logprefactor,mu,_,_=_bingham_lower_(m,A,Sigma,d,'phi_lower_poisson')
    if mu==0: return -np.inf if log else 0.0
    return _output_(logprefactor+mu+float(poisson.logsf(m-1,mu)),log,'phi_lower_poisson')

def phi_lower_normal(m,A,Sigma,d,p,log=False):
    '''
    The normal approximation of `phi_lower_poisson`, with P(W>=m) approximated by P(Z>=(m-1/2-mu)/mu^(1/2)) with the continuity correction.
    '''
    logprefactor,mu,_,_=_bingham_lower_(m,A,Sigma,d,'phi_lower_normal')
    if mu==0: return -np.inf if log else 0.0
    return _output_(logprefactor+mu+float(log_ndtr((mu-m+0.5)/math.sqrt(mu))),log,'phi_lower_normal')

def phi_lower_asymptotic(m,A,Sigma,d,p,log=False):
    '''
    The large-m form e^(N_d+mu)*m^(-N_d)*P(W>=m) of `phi_lower_poisson` with mu=sigma_(p)*tr(A).
    '''
    _,_,x,N=_bingham_lower_(m,A,Sigma,d,'phi_lower_asymptotic')
    if x==0: return -np.inf if log else 0.0
    return _output_(N+x-N*math.log(m)+float(poisson.logsf(m-1,x)),log,'phi_lower_asymptotic')

def psi_upper(m,d,p,g,B=None,log=False):
    '''
    The upper bounds of the remainder of the truncated matrix Langevin constant.

    Parameters
    ----------
    m : int
        The truncation order, at least 2.
    d,p : int
        The dimensions.
    g : GrowthParams
        The growth parameters.
    B : RectMatrix, optional
        The d*p parameter matrix, against which the growth condition is checked.
    log : logical, optional
        True for the bounds reported as natural logarithms.

    Returns
    -------
    BoundReport
        The report with upper_series=alpha_p*R_m(t) and upper_closed=alpha_p*(closed form of R_m(t)).

    Notes
    -----
    The rate in d of this bound is the optimistic one; for p=1 and larger d with small ||B|| it may fall below the true remainder. Use `psi_tail_certified` for a certificate.
    '''
    if m<2: raise DomainError('psi_upper error: m(%s) must be at least 2.'%m)
    t=0.0 if B is not None and frobenius(B)==0 else t_psi(d,p,g)
    series,closed=_upper_('psi',m,t,p,log)
    flags=[('growth',None if B is None else check_growth(B,d,g,'psi')[0]),('r_in_range',g.inrange('psi'))]
    return BoundReport('psi',m,d,p,t,series,closed,constants=_constants_(m,p,p),flags=flags,log=log)

def psi_tail_certified(m,B,d,p,log=False):
    '''
    The certified upper bound alpha_p*R_m(2*gamma1*p^2*||B'B/4||/d) of the Langevin remainder.

    Parameters
    ----------
    m : int
        The truncation order.
    B : RectMatrix
        The d*p parameter matrix.
    d,p : int
        The dimensions.
    log : logical, optional
        True for the natural logarithm of the bound.

    Returns
    -------
    float
        The bound.
    '''
    t=2*GAMMA1*p**2*frobenius(langevingram(B))/d
    if t==0: return -np.inf if log else 0.0
    return _output_(math.log(alpha_p(p))+r_m_series(m,t,log=True),log,'psi_tail_certified')

def psi_lower(m,B,d,p,log=False):
    '''
    The lower bounds of the remainder of the truncated matrix Langevin constant.

    Parameters
    ----------
    m : int
        The truncation order.
    B : RectMatrix
        The d*p parameter matrix of rank p.
    d,p : int
        The dimensions.
    log : logical, optional
        True for the natural logarithms of the bounds.

    Returns
    -------
    full : float
        The single-term bound times 1F2(1;m+1,d+1+m;mu) with mu=((1+m)/(2+m))^N_p*2p*beta_(p)/e.
    single : float
        The single-term bound (1+m)^(-N_p)*(d+m)^(-m)*(2p*beta_(p))^m/m!.
    '''
    if m<1: raise DomainError('psi_lower error: m(%s) must be positive.'%m)
    B=B if isinstance(B,RectMatrix) else RectMatrix(B)
    beta=eigensym(langevingram(B)).values
    if not 2*math.sqrt(max(float(beta[-1]),0.0))>10**-12*frobenius(B):
        raise DomainError('psi_lower error: B is rank deficient.')
    N=n_dim(p)
    tau=2*p*float(beta[-1])
    logsingle=-N*math.log(1+m)-m*math.log(d+m)+m*math.log(tau)-float(gammaln(m+1))
    mu=math.exp(N*(math.log(1+m)-math.log(2+m)))*tau/math.e
    logfull=logsingle+math.log(scalar1f2(m+1,d+1+m,mu))
    return _output_(logfull,log,'psi_lower'),_output_(logsingle,log,'psi_lower')

def select_m(tol,kind,d,p,g,A=None,mmax=40):
    '''
    The smallest truncation order whose closed-form upper bound does not exceed a tolerance.

    Parameters
    ----------
    tol : float
        The target tolerance.
    kind : 'phi' or 'psi'
        The kind of the normalizing constant.
    d,p : int
        The dimensions.
    g : GrowthParams
        The growth parameters.
    A : SymmetricMatrix, optional
        The Bingham parameter matrix, required when kind is 'phi'.
    mmax : int, optional
        The maximum truncation order to be scanned.

    Returns
    -------
    Selection
        The selection, which carries the minimum bound achieved and its argmin when no m qualifies.

    Notes
    -----
    The closed-form bound is unimodal in m, so all the orders in [2,mmax] are scanned.
    '''
    assert kind in ('phi','psi')
    if not tol>0 or mmax<2: raise DomainError('select_m error: tol>0 and mmax>=2 are required, got tol=%s, mmax=%s.'%(tol,mmax))
    t=t_phi(A,d,p,g) if kind=='phi' else t_psi(d,p,g)
    la,ltol=math.log(alpha_p(p)),math.log(tol)
    logs=[la+r_m_closed(m,t,log=True) for m in range(2,mmax+1)]
    argmin=2+int(np.argmin(logs))
    minimum=math.exp(min(logs)) if min(logs)<LOGMAX else np.inf
    for m,value in zip(range(2,mmax+1),logs):
        if value<=ltol: return Selection(True,m,math.exp(value),minimum,argmin)
    return Selection(False,None,None,minimum,argmin)
