'''
---------------------------
Monte Carlo on the Stiefel
---------------------------

Monte Carlo oracle of the normalizing constants under the uniform measure of the Stiefel manifold, including:
    * constants: CHUNK, ORTHOTOL, HEAVYTAIL
    * classes: StiefelPoint, McEstimate
    * functions: samplestiefel, haarorthogonal, mcphi, mcpsi, mczonalintegral, mcinvariance
'''

__all__=['CHUNK','ORTHOTOL','HEAVYTAIL','StiefelPoint','McEstimate','samplestiefel','haarorthogonal','mcphi','mcpsi','mczonalintegral','mcinvariance']

from collections import OrderedDict
from scipy.stats import ks_2samp
import numpy as np
import warnings
from ..Basics import InputError,DomainError,mpirun
from ..Misc import RandomStream,streams,eigensym
from ..Zonal import Partition,unitvalue,evalzonal

CHUNK=10000
ORTHOTOL=10**-12
HEAVYTAIL=10**6

class StiefelPoint(object):
    '''
    A point of the Stiefel manifold, i.e. a d*p matrix with orthonormal columns.

    Attributes
    ----------
    x : 2d ndarray
        The matrix.
    '''

    def __init__(self,x):
        '''
        Constructor.

        Parameters
        ----------
        x : 2d array-like
            The matrix.
        '''
        self.x=np.asarray(x,dtype=np.float64)
        if self.defect>ORTHOTOL: raise InputError('StiefelPoint error: orthonormality defect(%.3e) exceeds %.0e.'%(self.defect,ORTHOTOL))

    @property
    def defect(self):
        '''
        The Frobenius norm of x'x-I_p.
        '''
        return float(np.linalg.norm(self.x.T.dot(self.x)-np.eye(self.x.shape[1])))

class McEstimate(object):
    '''
    A Monte Carlo estimate.

    Attributes
    ----------
    mean : float
        The sample mean.
    stderr : float
        The standard error by the unbiased sample variance.
    n : int
        The number of the samples.
    seed : int
        The seed.
    target : float or None
        The value the estimate is compared with.
    slack : float
        The uncertainty of the target.
    '''

    def __init__(self,mean,stderr,n,seed,target=None,slack=0.0):
        '''
        Constructor.
        '''
        self.mean=mean
        self.stderr=stderr
        self.n=n
        self.seed=seed
        self.target=target
        self.slack=slack

    def agree(self,target=None,slack=None,nsigma=3):
        '''
        Judge whether the estimate agrees with a target, i.e. |mean-target|<=nsigma*stderr+slack.
        '''
        target=self.target if target is None else target
        slack=self.slack if slack is None else slack
        assert target is not None
        return bool(abs(self.mean-target)<=nsigma*self.stderr+slack)

    def tojson(self):
        '''
        The json object of the estimate.
        '''
        result=OrderedDict([('mean',self.mean),('stderr',self.stderr),('n',self.n),('seed',self.seed)])
        if self.target is not None:
            result['target']=self.target
            result['slack']=self.slack
            result['agree_3sigma']=self.agree()
        return result

    def __repr__(self):
        '''
        Convert an instance to string.
        '''
        return 'McEstimate(mean=%r,stderr=%r,n=%s,seed=%s)'%(self.mean,self.stderr,self.n,self.seed)

def _stiefel_(d,p,stream,count):
    q,r=np.linalg.qr(stream.normal((count,d,p)))
    signs=np.sign(np.diagonal(r,axis1=-2,axis2=-1))
    signs[signs==0]=1
    return q*signs[:,np.newaxis,:]

def samplestiefel(d,p,stream):
    '''
    A uniform sample of the Stiefel manifold V_{d,p} by the sign-fixed QR factorization of a Gaussian matrix.

    Parameters
    ----------
    d,p : int
        The dimensions.
    stream : RandomStream
        The random stream.

    Returns
    -------
    StiefelPoint
        The sample.
    '''
    if not d>=p>=1: raise DomainError('samplestiefel error: d>=p>=1 is required, got d=%s, p=%s.'%(d,p))
    return StiefelPoint(_stiefel_(d,p,stream,1)[0])

def haarorthogonal(d,stream):
    '''
    A Haar-uniform sample of the orthogonal group O(d).
    '''
    return samplestiefel(d,d,stream).x

def _summands_(kind,data,d,p,x):
    if kind=='phi':
        A,Sigma=data
        return np.exp(np.einsum('ij,nki,kl,nlj->n',A,x,Sigma,x))
    if kind=='psi':
        return np.exp(np.einsum('ij,nij->n',data,x))
    kappa,Sigma=data
    m=np.einsum('nki,kl,nlj->nij',x,Sigma,x)
    result=np.ones(x.shape[0])
    for j,part in enumerate(kappa):
        power=part-(kappa[j+1] if j+1<len(kappa) else 0)
        if power>0: result*=np.linalg.det(m[:,:j+1,:j+1])**power
    return result

def _chunk_(kind,data,d,p,seed,index,count):
    values=_summands_(kind,data,d,p,_stiefel_(d,p,RandomStream(seed,index),count))
    mean=float(np.sum(values))/count
    return count,mean,float(np.sum((values-mean)**2)),float(np.max(values))

def _merge_(a,b):
    na,ma,sa,xa=a
    nb,mb,sb,xb=b
    n=na+nb
    delta=mb-ma
    return n,ma+delta*nb/n,sa+sb+delta**2*na*nb/n,max(xa,xb)

def _estimate_(kind,data,d,p,n,seed,where):
    if n<2: raise DomainError('%s error: n(%s) must be at least 2.'%(where,n))
    counts=[CHUNK]*(n//CHUNK)+([n%CHUNK] if n%CHUNK else [])
    stats=mpirun(_chunk_,[(kind,data,d,p,seed,index,count) for index,count in enumerate(counts)])
    while len(stats)>1:
        stats=[_merge_(stats[i],stats[i+1]) if i+1<len(stats) else stats[i] for i in range(0,len(stats),2)]
    total,mean,m2,maximum=stats[0]
    if maximum>HEAVYTAIL*abs(mean):
        warnings.warn('%s warning: heavy tail, the maximum summand(%.3e) exceeds %.0e times the mean(%.3e).'%(where,maximum,HEAVYTAIL,mean))
    return McEstimate(mean,float(np.sqrt(m2/(total-1)/total)),total,seed)

def mcphi(A,Sigma,n,seed):
    '''
    The Monte Carlo estimate of the matrix Bingham constant as the mean of exp(tr(A*x'*Sigma*x)) over uniform x.

    Parameters
    ----------
    A : SymmetricMatrix
        The p*p parameter matrix.
    Sigma : SymmetricMatrix
        The d*d parameter matrix.
    n : int
        The number of the samples.
    seed : int
        The seed.

    Returns
    -------
    McEstimate
        The estimate.
    '''
    d,p=Sigma.n,A.n
    if d<p: raise InputError('mcphi error: d(%s) must not be less than p(%s).'%(d,p))
    return _estimate_('phi',(A.entries,Sigma.entries),d,p,n,seed,'mcphi')

def mcpsi(B,n,seed):
    '''
    The Monte Carlo estimate of the matrix Langevin constant as the mean of exp(tr(B'x)) over uniform x.

    Parameters
    ----------
    B : RectMatrix
        The d*p parameter matrix.
    n : int
        The number of the samples.
    seed : int
        The seed.

    Returns
    -------
    McEstimate
        The estimate.
    '''
    return _estimate_('psi',B.entries,B.d,B.p,n,seed,'mcpsi')

def mczonalintegral(kappa,Sigma,n,seed,table=None):
    '''
    The Monte Carlo estimate of the integral over the orthogonal group of prod_j det_j(H'*Sigma*H)^(kappa_j-kappa_{j+1}), where det_j is the j-th leading principal minor.

    Parameters
    ----------
    kappa : Partition
        The partition, with l(kappa)<=d.
    Sigma : SymmetricMatrix
        The d*d matrix.
    n : int
        The number of the samples.
    seed : int
        The seed.
    table : ZonalTable, optional
        The zonal table covering kappa. When given, the estimate carries the target C_kappa(Sigma)/C_kappa(I_d).

    Returns
    -------
    McEstimate
        The estimate.
    '''
    kappa,d=Partition(kappa),Sigma.n
    if kappa.length>d: raise DomainError('mczonalintegral error: l(%s) exceeds d(%s).'%(kappa,d))
    if kappa.length==0: return McEstimate(1.0,0.0,n,seed,target=1.0 if table is not None else None)
    result=_estimate_('zonal',(tuple(kappa),Sigma.entries),d,d,n,seed,'mczonalintegral')
    if table is not None:
        eigs=[float(x) for x in eigensym(Sigma).values]
        result.target=evalzonal(kappa,eigs,table)/float(unitvalue(kappa,d))
    return result

def mcinvariance(A,Sigma,n,seed,H=None,K=None):
    '''
    The two-sample Kolmogorov-Smirnov comparison of tr(A*x'*Sigma*x) and tr(A*(HxK)'*Sigma*(HxK)) over independent uniform samples.

    Parameters
    ----------
    A : SymmetricMatrix
        The p*p matrix.
    Sigma : SymmetricMatrix
        The d*d matrix.
    n : int
        The number of the samples of each side.
    seed : int
        The seed.
    H,K : 2d ndarray, optional
        The orthogonal matrices. Drawn from the Haar measure when omitted.

    Returns
    -------
    statistic,pvalue : float
        The statistic and the p-value of the test.
    '''
    d,p=Sigma.n,A.n
    first,second,left,right=streams(seed,4)
    H=haarorthogonal(d,left) if H is None else np.asarray(H)
    K=haarorthogonal(p,right) if K is None else np.asarray(K)
    x=_stiefel_(d,p,first,n)
    y=np.einsum('ij,njk,kl->nil',H,_stiefel_(d,p,second,n),K)
    trace=lambda x: np.einsum('ij,nki,kl,nlj->n',A.entries,x,Sigma.entries,x)
    result=ks_2samp(trace(x),trace(y))
    return float(result.statistic),float(result.pvalue)
