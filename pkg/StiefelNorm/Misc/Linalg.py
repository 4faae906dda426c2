'''
---------------
Linear algebras
---------------

Dense real linear algebras needed by the normalizing constants, including
    * constants: ASYMTOL, JACOBITOL, MAXSWEEPS, EPS
    * classes: SymmetricMatrix, RectMatrix, EigenSystem
    * functions: eigensym, frobenius, absdiag, langevingram, matrixfromjson, matrixtojson, readmatrix, writematrix
'''

__all__=[   'ASYMTOL','JACOBITOL','MAXSWEEPS','EPS',
            'SymmetricMatrix','RectMatrix','EigenSystem',
            'eigensym','frobenius','absdiag','langevingram','matrixfromjson','matrixtojson','readmatrix','writematrix'
            ]

import numpy as np
import warnings
import math
import json
from ..Basics import InputError

ASYMTOL=10**-8
JACOBITOL=10**-14
MAXSWEEPS=100
EPS=float(np.finfo(np.float64).eps)

def _finite_(entries,name):
    entries=np.array(entries,dtype=np.float64)
    if entries.ndim!=2: raise InputError('%s error: a matrix must be 2 dimensional, got %s dimension(s).'%(name,entries.ndim))
    if not np.all(np.isfinite(entries)): raise InputError('%s error: non-finite entries.'%name)
    return entries

class SymmetricMatrix(object):
    '''
    Dense real symmetric matrix.

    Attributes
    ----------
    entries : 2d ndarray
        The symmetrized entries.
    defect : float
        The asymmetry defect of the input entries, i.e. the maximum of :math:`|M-M^T|`.
    '''

    def __init__(self,entries):
        '''
        Constructor.

        Parameters
        ----------
        entries : 2d array-like
            The entries of the matrix, which will be symmetrized.
        '''
        entries=_finite_(entries,'SymmetricMatrix')
        if entries.shape[0]!=entries.shape[1] or entries.shape[0]<1:
            raise InputError('SymmetricMatrix error: a square matrix of order at least 1 is required, got shape %s.'%(entries.shape,))
        self.defect=float(np.max(np.abs(entries-entries.T)))
        if self.defect>ASYMTOL: raise InputError('SymmetricMatrix error: asymmetry defect(%.3e) exceeds %.1e.'%(self.defect,ASYMTOL))
        self.entries=(entries+entries.T)/2

    @property
    def n(self):
        '''
        The order of the matrix.
        '''
        return self.entries.shape[0]

    @property
    def shape(self):
        '''
        The shape of the matrix.
        '''
        return self.entries.shape

    def __array__(self,dtype=None,copy=None):
        '''
        Convert an instance to ndarray.
        '''
        return self.entries if dtype is None else self.entries.astype(dtype)

    def __repr__(self):
        '''
        Convert an instance to string.
        '''
        return 'SymmetricMatrix(%s)'%self.entries.tolist()

class RectMatrix(object):
    '''
    Dense real d*p matrix with d>=p.

    Attributes
    ----------
    entries : 2d ndarray
        The entries.
    '''

    def __init__(self,entries):
        '''
        Constructor.

        Parameters
        ----------
        entries : 2d array-like
            The entries of the matrix.
        '''
        self.entries=_finite_(entries,'RectMatrix')
        if not self.entries.shape[0]>=self.entries.shape[1]>=1:
            raise InputError('RectMatrix error: d>=p>=1 is required, got shape %s.'%(self.entries.shape,))

    @property
    def d(self):
        '''
        The number of rows.
        '''
        return self.entries.shape[0]

    @property
    def p(self):
        '''
        The number of columns.
        '''
        return self.entries.shape[1]

    @property
    def shape(self):
        '''
        The shape of the matrix.
        '''
        return self.entries.shape

    def __array__(self,dtype=None,copy=None):
        '''
        Convert an instance to ndarray.
        '''
        return self.entries if dtype is None else self.entries.astype(dtype)

    def __repr__(self):
        '''
        Convert an instance to string.
        '''
        return 'RectMatrix(%s)'%self.entries.tolist()

class EigenSystem(object):
    '''
    The ordered spectrum of a symmetric matrix.

    Attributes
    ----------
    values : 1d ndarray
        The eigenvalues sorted descendingly.
    vectors : 2d ndarray
        The eigenvectors as columns, in the same order as the eigenvalues.
    residual : float
        The maximum norm of Mv-lambda*v over all the eigenpairs.
    sweeps : int
        The number of Jacobi sweeps carried out.
    '''

    def __init__(self,values,vectors,residual,sweeps=0):
        '''
        Constructor.

        Parameters
        ----------
        values : 1d array-like
            The eigenvalues sorted descendingly.
        vectors : 2d ndarray
            The eigenvectors as columns.
        residual : float
            The residual of the eigenpairs.
        sweeps : int, optional
            The number of Jacobi sweeps carried out.
        '''
        self.values=np.asarray(values)
        self.vectors=vectors
        self.residual=residual
        self.sweeps=sweeps

    @property
    def radius(self):
        '''
        The spectral radius.
        '''
        return float(np.max(np.abs(self.values))) if len(self.values)>0 else 0.0

def _entries_(M):
    if isinstance(M,(SymmetricMatrix,RectMatrix)): return M.entries
    return _finite_(M,'Linalg')

def eigensym(M,tol=JACOBITOL,maxsweeps=MAXSWEEPS):
    '''
    The eigensystem of a real symmetric matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    M : SymmetricMatrix or 2d array-like
        The matrix.
    tol : float, optional
        The sweeps stop when the off-diagonal Frobenius mass falls below `tol` times the initial Frobenius norm.
    maxsweeps : int, optional
        The maximum number of sweeps.

    Returns
    -------
    EigenSystem
        The ordered eigensystem.
    '''
    M=M if isinstance(M,SymmetricMatrix) else SymmetricMatrix(M)
    a=np.array(M.entries)
    n=a.shape[0]
    v=np.eye(n)
    scale=float(np.linalg.norm(a))
    threshold=tol*scale
    offdiag=lambda a: float(np.linalg.norm(a-np.diag(np.diag(a))))
    sweeps=0
    while offdiag(a)>threshold:
        if sweeps>=maxsweeps:
            warnings.warn('eigensym warning: maximum number of sweeps(%s) reached with off-diagonal mass %.3e.'%(maxsweeps,offdiag(a)))
            break
        for p in range(n-1):
            for q in range(p+1,n):
                apq,h=a[p,q],a[q,q]-a[p,p]
                if abs(apq)<=EPS*math.sqrt(abs(a[p,p]*a[q,q])) or abs(apq)<=EPS*EPS*scale:
                    a[p,q]=a[q,p]=0.0
                    continue
                if abs(apq)<=EPS*abs(h):
                    t=apq/h
                else:
                    theta=h/(2*apq)
                    t=(1.0 if theta>=0 else -1.0)/(abs(theta)+math.hypot(theta,1.0))
                c=1.0/math.sqrt(t*t+1.0)
                s=t*c
                ap,aq=a[:,p].copy(),a[:,q].copy()
                a[:,p],a[:,q]=c*ap-s*aq,s*ap+c*aq
                ap,aq=a[p,:].copy(),a[q,:].copy()
                a[p,:],a[q,:]=c*ap-s*aq,s*ap+c*aq
                a[p,q]=a[q,p]=0.0
                vp,vq=v[:,p].copy(),v[:,q].copy()
                v[:,p],v[:,q]=c*vp-s*vq,s*vp+c*vq
        sweeps+=1
    values=np.diag(a)
    order=np.argsort(-values,kind='stable')
    values,v=values[order],v[:,order]
    residual=float(np.max(np.linalg.norm(M.entries.dot(v)-v*values[np.newaxis,:],axis=0)))
    return EigenSystem(values,v,residual,sweeps)

def frobenius(M):
    '''
    The Frobenius norm of a matrix.

    Parameters
    ----------
    M : SymmetricMatrix, RectMatrix or 2d array-like
        The matrix.

    Returns
    -------
    float
        The square root of the sum of the squared entries.
    '''
    return float(np.linalg.norm(_entries_(M)))

def absdiag(M):
    '''
    The diagonal matrix of the absolute eigenvalues of a symmetric matrix, in descending order.

    Parameters
    ----------
    M : SymmetricMatrix or 2d array-like
        The matrix.

    Returns
    -------
    SymmetricMatrix
        The diagonal matrix.
    '''
    return SymmetricMatrix(np.diag(np.sort(np.abs(eigensym(M).values))[::-1]))

def langevingram(B):
    '''
    The matrix B'B/4 on which the matrix Langevin constant depends.

    Parameters
    ----------
    B : RectMatrix or 2d array-like
        The parameter matrix.

    Returns
    -------
    SymmetricMatrix
        The p*p matrix B'B/4.
    '''
    B=B if isinstance(B,RectMatrix) else RectMatrix(B)
    gram=B.entries.T.dot(B.entries)/4
    return SymmetricMatrix((gram+gram.T)/2)

def matrixfromjson(obj,symmetric=True):
    '''
    Construct a matrix from its json object {"rows": n, "cols": m, "data": [row-major numbers]}.

    Parameters
    ----------
    obj : dict
        The json object.
    symmetric : logical, optional
        True for a SymmetricMatrix and False for a RectMatrix.

    Returns
    -------
    SymmetricMatrix or RectMatrix
        The matrix.
    '''
    try:
        rows,cols,data=int(obj['rows']),int(obj['cols']),list(obj['data'])
    except (KeyError,TypeError,ValueError) as error:
        raise InputError('matrixfromjson error: malformed matrix object(%s).'%error)
    if rows<1 or cols<1 or len(data)!=rows*cols:
        raise InputError('matrixfromjson error: %s data for a %s*%s matrix.'%(len(data),rows,cols))
    try:
        entries=np.array(data,dtype=np.float64).reshape((rows,cols))
    except (TypeError,ValueError) as error:
        raise InputError('matrixfromjson error: non-numeric data(%s).'%error)
    return SymmetricMatrix(entries) if symmetric else RectMatrix(entries)

def matrixtojson(M):
    '''
    The json object of a matrix.

    Parameters
    ----------
    M : SymmetricMatrix, RectMatrix or 2d array-like
        The matrix.

    Returns
    -------
    dict
        The json object.
    '''
    entries=_entries_(M)
    return {'rows':entries.shape[0],'cols':entries.shape[1],'data':[float(x) for x in entries.reshape(-1)]}

def readmatrix(path,symmetric=True):
    '''
    Read a matrix from a json file.

    Parameters
    ----------
    path : str
        The path of the file.
    symmetric : logical, optional
        True for a SymmetricMatrix and False for a RectMatrix.

    Returns
    -------
    SymmetricMatrix or RectMatrix
        The matrix.
    '''
    try:
        with open(path,'r') as fin: obj=json.load(fin)
    except (OSError,ValueError) as error:
        raise InputError('readmatrix error: cannot read %s(%s).'%(path,error))
    return matrixfromjson(obj,symmetric=symmetric)

def writematrix(M,path):
    '''
    Write a matrix to a json file.

    Parameters
    ----------
    M : SymmetricMatrix, RectMatrix or 2d array-like
        The matrix.
    path : str
        The path of the file.
    '''
    with open(path,'w') as fout: json.dump(matrixtojson(M),fout)
