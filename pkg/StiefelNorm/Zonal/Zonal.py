'''
-----------------
Zonal polynomials
-----------------

Exact zonal polynomials in the monomial symmetric basis, including:
    * constants: CACHEENV
    * classes: ZonalTable
    * functions: cachedir, zonalcoeffs, unitvalue, monomial, evalzonal, zonaltable
'''

__all__=['CACHEENV','ZonalTable','cachedir','zonalcoeffs','unitvalue','monomial','evalzonal','zonaltable']

from fractions import Fraction
from collections import OrderedDict
from math import factorial
import itertools as it
import numbers
import glob
import math
import os
import re
from .Partition import *
from ..Basics import StiefelNormError,InputError,DomainError,ResourceError,Sheet,mpirun

CACHEENV='STIEFEL_NORM_CACHE'

def cachedir():
    '''
    The directory of the cached zonal tables, i.e. $STIEFEL_NORM_CACHE or ~/.stiefelnorm.
    '''
    return os.environ.get(CACHEENV) or os.path.join(os.path.expanduser('~'),'.stiefelnorm')

def unitvalue(kappa,d):
    '''
    The exact value of the zonal polynomial at the d*d identity matrix.

    Parameters
    ----------
    kappa : Partition
        The partition.
    d : int
        The order of the identity matrix.

    Returns
    -------
    Fraction
        The value of C_kappa(I_d).
    '''
    kappa=Partition(kappa)
    if d<kappa.length: raise DomainError('unitvalue error: d(%s) is less than the length of %s.'%(d,kappa))
    k,l=kappa.weight,kappa.length
    numerator=Fraction(2**(2*k)*factorial(k))*partitionalshiftedfactorial(Fraction(d,2),kappa)
    for i,j in it.combinations(range(1,l+1),2):
        numerator*=2*kappa[i-1]-2*kappa[j-1]-i+j
    denominator=1
    for i in range(1,l+1):
        denominator*=factorial(2*kappa[i-1]+l-i)
    return numerator/denominator

def _submultisets_(lamda):
    counts=sorted(lamda.multiplicities.items(),reverse=True)
    result=[]
    for ns in it.product(*(range(n+1) for _,n in counts)):
        result.append(tuple(part for (part,_),n in zip(counts,ns) for _ in range(n)))
    return result

def monomial(lamda,eigs):
    '''
    The monomial symmetric function of a partition evaluated at a spectrum.

    Parameters
    ----------
    lamda : Partition
        The partition.
    eigs : 1d array-like
        The spectrum, exact when all its entries are int or Fraction.

    Returns
    -------
    int, Fraction or float
        The sum of the distinct monomials with exponent pattern lamda.

    Notes
    -----
    Dynamic programming over the variables keyed by the sub-multisets of lamda, so that each distinct monomial is counted once.
    '''
    lamda=Partition(lamda)
    eigs=[x for x in eigs if x!=0]
    if lamda.length>len(eigs): return 0
    states=_submultisets_(lamda)
    values={state:0 for state in states}
    values[()]=1
    for x in eigs:
        new=dict(values)
        for state in states:
            for a in set(state):
                rest=list(state)
                rest.remove(a)
                old=values[tuple(rest)]
                if old!=0: new[state]+=x**a*old
        values=new
    return values[tuple(lamda)]

def zonalcoeffs(kappa,evallen=None):
    '''
    The coefficients of a zonal polynomial in the monomial symmetric basis by the Laplace-Beltrami eigenfunction recurrence.

    Parameters
    ----------
    kappa : Partition
        The partition.
    evallen : int, optional
        When given, only the coefficients of the partitions lamda no longer than it are computed, which suffice for spectra with at most `evallen` nonzero entries.

    Returns
    -------
    OrderedDict of Partition -> Fraction
        The nonzero coefficients c_{kappa,lamda}, in descending lexicographic order of lamda.

    Notes
    -----
    * A raising move never lengthens a partition, so the restriction by `evallen` is exact.
    * The overall scale is fixed so that the evaluation at I_d with d=max(l(kappa),2) equals `unitvalue`.
    '''
    kappa=Partition(kappa)
    k=kappa.weight
    if k==0: return OrderedDict([(Partition(),Fraction(1))])
    d=max(kappa.length,2)
    evallen=k if evallen is None else max(evallen,d)
    result,rk=OrderedDict(),rho(kappa)
    for lamda in partitions(k,evallen):
        order=lexcompare(lamda,kappa)
        if order>0: continue
        if order==0:
            result[lamda]=Fraction(1)
            continue
        numerator=Fraction(0)
        for j in range(1,lamda.length):
            for i in range(j):
                for t in range(1,lamda[j]+1):
                    parts=list(lamda)
                    parts[i]+=t
                    parts[j]-=t
                    coeff=result.get(Partition(sorted(parts,reverse=True)))
                    if coeff: numerator+=(lamda[i]-lamda[j]+2*t)*coeff
        if numerator==0: continue
        denominator=rk-rho(lamda)
        if denominator==0: raise StiefelNormError('zonalcoeffs error: degenerate recurrence denominator for kappa=%s, lambda=%s.'%(kappa,lamda))
        result[lamda]=numerator/denominator
    ones=[1]*d
    scale=unitvalue(kappa,d)/sum(coeff*monomial(lamda,ones) for lamda,coeff in result.items() if lamda.length<=d)
    for lamda in result: result[lamda]*=scale
    return result

class ZonalTable(object):
    '''
    The table of the exact coefficients of the zonal polynomials in the monomial symmetric basis.

    Attributes
    ----------
    maxweight : int
        The maximum weight of the partitions kappa.
    maxlen : int
        The maximum length of the partitions kappa.
    evallen : int or None
        The maximum length of the partitions lamda, i.e. the maximum number of the nonzero entries of the spectra the table can evaluate. None for no limit.
    coeffs : OrderedDict of Partition -> OrderedDict of Partition -> Fraction
        The coefficients c_{kappa,lamda}.
    '''
    CAP=30
    VERSION=1

    def __init__(self,maxweight,maxlen,coeffs,evallen=None):
        '''
        Constructor.

        Parameters
        ----------
        maxweight : int
            The maximum weight of the partitions kappa.
        maxlen : int
            The maximum length of the partitions kappa.
        coeffs : OrderedDict of Partition -> OrderedDict of Partition -> Fraction
            The coefficients.
        evallen : int, optional
            The maximum length of the partitions lamda.
        '''
        self.maxweight=maxweight
        self.maxlen=maxlen
        self.evallen=evallen
        self.coeffs=coeffs

    @classmethod
    def build(cls,maxweight,maxlen,evallen=None):
        '''
        Build a table from scratch, with the partitions distributed over the mpi processes.

        Parameters
        ----------
        maxweight : int
            The maximum weight of the partitions kappa.
        maxlen : int
            The maximum length of the partitions kappa.
        evallen : int, optional
            The maximum length of the partitions lamda.

        Returns
        -------
        ZonalTable
            The table.
        '''
        if maxweight<0 or maxlen<1: raise DomainError('ZonalTable.build error: maxweight>=0 and maxlen>=1 are required, got %s and %s.'%(maxweight,maxlen))
        if maxweight>cls.CAP: raise ResourceError('ZonalTable.build error: maxweight(%s) exceeds the cap(%s).'%(maxweight,cls.CAP))
        if evallen is not None and evallen>=maxweight: evallen=None
        if evallen is not None: evallen=max(evallen,maxlen,2)
        kappas=[kappa for k in range(maxweight+1) for kappa in partitions(k,maxlen)]
        values=mpirun(zonalcoeffs,[(kappa,evallen) for kappa in kappas],bcast=True)
        return cls(maxweight,maxlen,OrderedDict(zip(kappas,values)),evallen=evallen)

    @property
    def key(self):
        '''
        The cache key of the table.
        '''
        return 'zonal-v%s-w%s-l%s-e%s'%(self.VERSION,self.maxweight,self.maxlen,'all' if self.evallen is None else self.evallen)

    def covers(self,maxweight,maxlen,evallen=None):
        '''
        Judge whether the table covers all the partitions with bounded weight and length.

        Parameters
        ----------
        maxweight,maxlen : int
            The maximum weight and length of the partitions kappa.
        evallen : int, optional
            The maximum number of the nonzero entries of the spectra to be evaluated. None for no limit.

        Returns
        -------
        logical
            True for covered and False for not.
        '''
        if maxweight>self.maxweight: return False
        if maxlen>self.maxlen and self.maxlen<maxweight: return False
        if self.evallen is None or (evallen is not None and evallen<=self.evallen): return True
        return evallen is None and self.evallen>=maxweight

    def kappas(self,k,maxlen=None):
        '''
        The partitions of weight k in the table with bounded length, in descending lexicographic order.
        '''
        if k>self.maxweight: raise DomainError('ZonalTable.kappas error: weight(%s) exceeds the table(%s).'%(k,self.maxweight))
        return partitions(k,self.maxlen if maxlen is None else max(min(maxlen,self.maxlen),1))

    def __contains__(self,kappa):
        '''
        Judge whether a partition is in the table.
        '''
        return Partition(kappa) in self.coeffs

    def __getitem__(self,kappa):
        '''
        The coefficients of a partition.
        '''
        kappa=Partition(kappa)
        if kappa not in self.coeffs: raise DomainError('ZonalTable error: %s is outside the table(maxweight=%s, maxlen=%s).'%(kappa,self.maxweight,self.maxlen))
        return self.coeffs[kappa]

    def restricted(self,maxweight,maxlen):
        '''
        The sub-table with bounded weight and length.
        '''
        assert maxweight<=self.maxweight
        coeffs=OrderedDict((kappa,coeff) for kappa,coeff in self.coeffs.items() if kappa.weight<=maxweight and kappa.length<=maxlen)
        return ZonalTable(maxweight,min(maxlen,self.maxlen),coeffs,evallen=self.evallen)

    def dump(self,path):
        '''
        Write the table to a text file, one line per (kappa, lambda, numerator, denominator).

        Parameters
        ----------
        path : str
            The path of the file.
        '''
        tostr=lambda partition: ','.join(str(part) for part in partition) or '-'
        with open(path,'w') as fout:
            fout.write('# StiefelNorm zonal coefficients version %s maxweight %s maxlen %s evallen %s\n'%(self.VERSION,self.maxweight,self.maxlen,'all' if self.evallen is None else self.evallen))
            for kappa,coeffs in self.coeffs.items():
                for lamda,coeff in coeffs.items():
                    fout.write('%s %s %s %s\n'%(tostr(kappa),tostr(lamda),coeff.numerator,coeff.denominator))

    @classmethod
    def load(cls,path):
        '''
        Read a table from a text file.

        Parameters
        ----------
        path : str
            The path of the file.

        Returns
        -------
        ZonalTable
            The table.
        '''
        frompart=lambda literal: Partition(()) if literal=='-' else Partition(int(part) for part in literal.split(','))
        with open(path,'r') as fin:
            header=re.fullmatch(r'# StiefelNorm zonal coefficients version (\d+) maxweight (\d+) maxlen (\d+) evallen (\d+|all)\s*',fin.readline())
            if header is None or int(header.group(1))!=cls.VERSION:
                raise InputError('ZonalTable.load error: %s is not a version %s table.'%(path,cls.VERSION))
            coeffs=OrderedDict()
            for line in fin:
                try:
                    kappa,lamda,num,den=line.split()
                    coeffs.setdefault(frompart(kappa),OrderedDict())[frompart(lamda)]=Fraction(int(num),int(den))
                except (ValueError,ZeroDivisionError,InputError):
                    raise InputError('ZonalTable.load error: malformed line(%r) in %s.'%(line,path))
        evallen=None if header.group(4)=='all' else int(header.group(4))
        return cls(int(header.group(2)),int(header.group(3)),coeffs,evallen=evallen)

    def items(self,weight=None,kappa=None):
        '''
        The (kappa,lamda,coefficient) triples, optionally of a given weight or of a single partition kappa.
        '''
        if kappa is not None: return [(Partition(kappa),lamda,coeff) for lamda,coeff in self[kappa].items()]
        return [(kappa,lamda,coeff) for kappa,coeffs in self.coeffs.items() if weight is None or kappa.weight==weight for lamda,coeff in coeffs.items()]

    def tostr(self,weight=None,kappa=None):
        '''
        The text representation of the table.

        Parameters
        ----------
        weight : int, optional
            When given, only the partitions of this weight are included.
        kappa : Partition, optional
            When given, only this partition is included.

        Returns
        -------
        str
            The text representation.
        '''
        items=self.items(weight,kappa)
        sheet=Sheet(cols=('kappa','lambda','coefficient'),rows=tuple(range(1,len(items)+1)) or ('',),corner='#')
        for i,(kappa,lamda,coeff) in enumerate(items):
            sheet[i,0],sheet[i,1],sheet[i,2]=str(kappa),str(lamda),str(coeff)
        return sheet.tostr()

    def tojson(self,weight=None,kappa=None):
        '''
        The json object of the table.

        Parameters
        ----------
        weight : int, optional
            When given, only the partitions of this weight are included.
        kappa : Partition, optional
            When given, only this partition is included.

        Returns
        -------
        dict
            The json object.
        '''
        return  {   'version':self.VERSION,'maxweight':self.maxweight,'maxlen':self.maxlen,'evallen':self.evallen,
                    'coefficients':[{'kappa':list(part),'lambda':list(lamda),'num':coeff.numerator,'den':coeff.denominator} for part,lamda,coeff in self.items(weight,kappa)]
                    }

def evalzonal(kappa,eigs,table,monomials=None):
    '''
    Evaluate a zonal polynomial at a spectrum.

    Parameters
    ----------
    kappa : Partition
        The partition.
    eigs : 1d array-like
        The spectrum. When all its entries are int or Fraction, the evaluation is exact; otherwise in binary64 with compensated summation.
    table : ZonalTable
        The coefficient table.
    monomials : dict, optional
        The cache of the monomial symmetric functions at the same spectrum.

    Returns
    -------
    Fraction or float
        The value of C_kappa at the spectrum.
    '''
    coeffs=table[kappa]
    eigs=[x for x in eigs if x!=0]
    if table.evallen is not None and len(eigs)>table.evallen and Partition(kappa).weight>table.evallen:
        raise DomainError('evalzonal error: %s nonzero eigenvalues exceed the table limit(%s).'%(len(eigs),table.evallen))
    monomials={} if monomials is None else monomials
    exact=all(isinstance(x,(numbers.Integral,Fraction)) for x in eigs)
    terms=[]
    for lamda,coeff in coeffs.items():
        if lamda.length>len(eigs): continue
        if lamda not in monomials: monomials[lamda]=monomial(lamda,eigs)
        terms.append(coeff*monomials[lamda] if exact else float(coeff)*float(monomials[lamda]))
    return sum(terms,Fraction(0)) if exact else math.fsum(terms)

def zonaltable(maxweight,maxlen,evallen=None,cache=None):
    '''
    Get a zonal table, optionally through the cache.

    Parameters
    ----------
    maxweight : int
        The maximum weight of the partitions kappa.
    maxlen : int
        The maximum length of the partitions kappa.
    evallen : int, optional
        The maximum number of the nonzero entries of the spectra to be evaluated. None for no limit.
    cache : None, True or str, optional
        None for no caching, True for the default cache directory and str for an assigned cache directory.

    Returns
    -------
    ZonalTable
        The table.
    '''
    maxlen=max(1,min(maxlen,max(maxweight,1)))
    if maxweight>ZonalTable.CAP: raise ResourceError('zonaltable error: maxweight(%s) exceeds the cap(%s).'%(maxweight,ZonalTable.CAP))
    if cache is None: return ZonalTable.build(maxweight,maxlen,evallen)
    dir=cachedir() if cache is True else cache
    for path in sorted(glob.glob(os.path.join(dir,'zonal-v%s-w*-l*-e*.txt'%ZonalTable.VERSION))):
        try:
            table=ZonalTable.load(path)
        except (OSError,InputError):
            continue
        if table.covers(maxweight,maxlen,evallen): return table.restricted(maxweight,maxlen)
    table=ZonalTable.build(maxweight,maxlen,evallen)
    try:
        if not os.path.exists(dir): os.makedirs(dir)
        table.dump(os.path.join(dir,'%s.txt'%table.key))
    except OSError:
        pass
    return table
