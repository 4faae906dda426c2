'''
----------
Partitions
----------

Integer partitions and shifted factorials, including:
    * classes: Partition
    * functions: partitions, lexcompare, shiftedfactorial, partitionalshiftedfactorial, rho, partitioncount
'''

__all__=['Partition','partitions','lexcompare','shiftedfactorial','partitionalshiftedfactorial','rho','partitioncount']

from fractions import Fraction
from functools import lru_cache
from collections import Counter
import numbers
import re
from ..Basics import InputError,DomainError

class Partition(tuple):
    '''
    Integer partition, i.e. a weakly decreasing tuple of positive integers with the trailing zeros stripped.
    '''

    def __new__(cls,parts=()):
        '''
        Constructor.

        Parameters
        ----------
        parts : iterable of int, optional
            The parts of the partition, with optional trailing zeros.
        '''
        parts=tuple(parts)
        if any(not isinstance(part,numbers.Integral) or part<0 for part in parts):
            raise InputError('Partition error: parts must be nonnegative integers, got %s.'%(parts,))
        if any(parts[i]<parts[i+1] for i in range(len(parts)-1)):
            raise InputError('Partition error: parts must be weakly decreasing, got %s.'%(parts,))
        return tuple.__new__(cls,(int(part) for part in parts if part>0))

    @classmethod
    def fromstr(cls,literal):
        '''
        Construct a partition from its literal, e.g. 'κ=[3,1,1]', 'kappa=[3,1,1]', '[3,1,1]', '3,1,1' or '[]'.

        Parameters
        ----------
        literal : str
            The literal.

        Returns
        -------
        Partition
            The partition.
        '''
        match=re.fullmatch(r'\s*(?:(?:κ|kappa)\s*=\s*)?[\[\(]?\s*([0-9,\s]*?)\s*[\]\)]?\s*',literal)
        if match is None: raise InputError('Partition.fromstr error: malformed literal(%r).'%literal)
        body=match.group(1).strip()
        try:
            parts=[int(part) for part in body.split(',') if part.strip()] if body else []
        except ValueError:
            raise InputError('Partition.fromstr error: malformed literal(%r).'%literal)
        return cls(parts)

    @property
    def weight(self):
        '''
        The sum of the parts.
        '''
        return sum(self)

    @property
    def length(self):
        '''
        The number of the nonzero parts.
        '''
        return len(self)

    @property
    def multiplicities(self):
        '''
        The multiplicities of the distinct parts.
        '''
        return Counter(self)

    def padded(self,n):
        '''
        The parts padded with zeros to length n.
        '''
        assert n>=len(self)
        return tuple(self)+(0,)*(n-len(self))

    def __repr__(self):
        '''
        Convert an instance to string.
        '''
        return '(%s)'%(','.join(str(part) for part in self))

    __str__=__repr__

@lru_cache(maxsize=None)
def _partitions_(k,maxpart,maxlen):
    if k==0: return ((),)
    if maxlen==0: return ()
    result=[]
    for first in range(min(k,maxpart),0,-1):
        for rest in _partitions_(k-first,first,maxlen-1):
            result.append((first,)+rest)
    return tuple(result)

def partitions(k,maxlen):
    '''
    All the partitions of a given weight with bounded length, in descending lexicographic order.

    Parameters
    ----------
    k : int
        The weight.
    maxlen : int
        The maximum length.

    Returns
    -------
    list of Partition
        The partitions.
    '''
    if k<0 or maxlen<1: raise DomainError('partitions error: k>=0 and maxlen>=1 are required, got k=%s, maxlen=%s.'%(k,maxlen))
    return [Partition(parts) for parts in _partitions_(k,k,min(maxlen,k))]

def lexcompare(kappa,lamda):
    '''
    Compare two partitions of the same weight in the lexicographic order.

    Parameters
    ----------
    kappa,lamda : Partition
        The partitions.

    Returns
    -------
    int
        -1 if kappa<lamda, 0 if kappa==lamda and 1 if kappa>lamda.
    '''
    if sum(kappa)!=sum(lamda):
        raise DomainError('lexcompare error: unequal weights(%s and %s).'%(sum(kappa),sum(lamda)))
    for a,b in zip(kappa,lamda):
        if a!=b: return -1 if a<b else 1
    return 0

def shiftedfactorial(a,k):
    '''
    The shifted factorial a(a+1)...(a+k-1), with (a)_0=1. Exact when a is int or Fraction.

    Parameters
    ----------
    a : int, Fraction or float
        The base.
    k : int
        The number of factors.

    Returns
    -------
    int, Fraction or float
        The shifted factorial.
    '''
    assert k>=0
    result=1
    for i in range(k): result*=a+i
    return result

def partitionalshiftedfactorial(a,kappa):
    '''
    The partitional shifted factorial prod_i (a-(i-1)/2)_{kappa_i}. Exact when a is int or Fraction.

    Parameters
    ----------
    a : int, Fraction or float
        The base.
    kappa : Partition
        The partition.

    Returns
    -------
    int, Fraction or float
        The partitional shifted factorial.
    '''
    exact=isinstance(a,(numbers.Integral,Fraction))
    result=1
    for i,part in enumerate(kappa):
        result*=shiftedfactorial(a-(Fraction(i,2) if exact else i/2.0),part)
    return result

def rho(kappa):
    '''
    The eigenvalue label sum_i kappa_i(kappa_i-i), with 1-based i.
    '''
    return sum(part*(part-i) for i,part in enumerate(kappa,start=1))

@lru_cache(maxsize=None)
def partitioncount(k,maxpart=None):
    '''
    The number of partitions of k (with parts at most maxpart) by dynamic programming.
    '''
    maxpart=k if maxpart is None else maxpart
    counts=[1]+[0]*k
    for part in range(1,maxpart+1):
        for n in range(part,k+1): counts[n]+=counts[n-part]
    return counts[k]
