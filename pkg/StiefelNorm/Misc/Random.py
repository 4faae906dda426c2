'''
--------------
Random streams
--------------

Reproducible random streams for parallel sampling, including
    * classes: RandomStream
    * functions: streams
'''

__all__=['RandomStream','streams']

import numpy as np

class RandomStream(object):
    '''
    A counter-based random stream keyed by (seed, index), whose normal variates are generated by the polar method.

    Attributes
    ----------
    seed : int
        The seed.
    index : int
        The index of the stream.
    generator : np.random.Generator
        The generator driven by the Philox bit generator.
    '''

    def __init__(self,seed,index=0):
        '''
        Constructor.

        Parameters
        ----------
        seed : int
            The seed.
        index : int, optional
            The index of the stream.
        '''
        assert seed>=0 and index>=0
        self.seed=seed
        self.index=index
        self.generator=np.random.Generator(np.random.Philox(key=np.array([seed,index],dtype=np.uint64)))

    def uniform(self,size):
        '''
        Uniform variates in [0,1).

        Parameters
        ----------
        size : int or tuple of int
            The shape of the variates.

        Returns
        -------
        ndarray
            The variates.
        '''
        return self.generator.random(size)

    def normal(self,size):
        '''
        Standard normal variates by the Marsaglia polar method.

        Parameters
        ----------
        size : int or tuple of int
            The shape of the variates.

        Returns
        -------
        ndarray
            The variates.
        '''
        shape=(size,) if isinstance(size,(int,np.integer)) else tuple(size)
        total=int(np.prod(shape,dtype=np.int64))
        result,count=np.empty(total),0
        while count<total:
            npair=max((total-count+1)//2,8)
            u=2*self.generator.random((npair,2))-1
            s=np.sum(u*u,axis=1)
            accepted=(s>0)&(s<1)
            u,s=u[accepted],s[accepted]
            values=(u*np.sqrt(-2*np.log(s)/s)[:,np.newaxis]).reshape(-1)
            nused=min(len(values),total-count)
            result[count:count+nused]=values[:nused]
            count+=nused
        return result.reshape(shape)

def streams(seed,count):
    '''
    A list of independent streams sharing a seed.

    Parameters
    ----------
    seed : int
        The seed.
    count : int
        The number of streams.

    Returns
    -------
    list of RandomStream
        The streams with indices 0,1,...,count-1.
    '''
    return [RandomStream(seed,index) for index in range(count)]
