'''
This subpackage implements the command line interface of the package, including:
    * constants: EXIT_OK, EXIT_INPUT, EXIT_RESOURCE, EXIT_VALIDATION
    * classes: Manager
    * functions: parsegrid, provenance, cmdphi, cmdpsi, cmdzonal, cmdboundstable, cmdvalidate, cmdmccheck, main
'''

__all__=['EXIT_OK','EXIT_INPUT','EXIT_RESOURCE','EXIT_VALIDATION','Manager','parsegrid','provenance','cmdphi','cmdpsi','cmdzonal','cmdboundstable','cmdvalidate','cmdmccheck','main']

import os
import sys
import csv
import json
import numpy as np
from collections import OrderedDict
from argparse import ArgumentParser
from ..Basics import VERSION,InputError,DomainError,ResourceError,Log,floattostr,confighash
from ..Misc import SymmetricMatrix,RectMatrix,eigensym,readmatrix
from ..Zonal import Partition,zonaltable
from ..Bounds import GrowthParams,phi_upper,phi_lower,psi_upper,psi_lower
from ..Verify import SEED,NSAMPLE,suite,summary
from ..NormConst import APPROX,MCCHECK,SELECTM,Bingham,BinghamAPPROX,BinghamMCCHECK,BinghamSELECTM,Langevin,LangevinAPPROX,LangevinMCCHECK,LangevinSELECTM

EXIT_OK=0
EXIT_INPUT=2
EXIT_RESOURCE=3
EXIT_VALIDATION=4

class Manager(object):
    '''
    The manager of the command line interface.

    Attributes
    ----------
    args : list of str
        The arguments passed to this manager.
    parser : ArgumentParser
        The argument parser.
    out : file
        The stream of the results.
    '''

    def __init__(self,args,out=None):
        '''
        Constructor.

        Parameters
        ----------
        args : list of str
            The args passed to this manager, the first one being the program name.
        out : file, optional
            The stream of the results. Default the stdout.
        '''
        self.args=args
        self.out=sys.stdout if out is None else out
        self.parser=ArgumentParser(prog=os.path.basename(args[0]),description='Normalizing constants of the matrix Bingham and Langevin distributions with certified remainder bounds.')
        self.parser.add_argument('-q','--quiet',help='Mute the log on the stderr.',action='store_true')
        self.phi()
        self.psi()
        self.zonal()
        self.boundstable()
        self.validate()
        self.mccheck()

    def add_subcommand(self,name,subcommand,help=None):
        '''
        Add a subcommand to the manager.

        Parameters
        ----------
        name : str
            The name of the subcommand.
        subcommand : callable
            The function that implements the subcommand.
        help : str, optional
            The description of the subcommand.

        Returns
        -------
        ArgumentParser
            The subparser corresponding to the subcommand.
        '''
        actions=self.parser.add_subparsers() if self.parser._subparsers is None else self.parser._get_positional_actions()[0]
        subparser=actions.add_parser(name,help=help)
        subparser.set_defaults(subcommand=subcommand)
        return subparser

    @staticmethod
    def add_series(subcommand):
        '''
        Add the arguments shared by the series subcommands.
        '''
        subcommand.add_argument('-m','--m',help='The truncation order.',type=int,default=4)
        subcommand.add_argument('--kmax',help='The cutoff degree of the reference remainder.',type=int,default=None)
        subcommand.add_argument('--gamma0',help='The growth prefactor. Default the minimal one.',type=float,default=None)
        subcommand.add_argument('-r','--r',help='The growth exponent.',type=float,default=0.0)
        subcommand.add_argument('--tol',help='Select the smallest m whose closed-form bound achieves this tolerance.',type=float,default=None)
        subcommand.add_argument('--mmax',help='The maximum m scanned by --tol.',type=int,default=40)
        subcommand.add_argument('--mode',help='The arithmetic mode.',default='floating',choices=['floating','exact'])
        subcommand.add_argument('--log',help='Report the bounds as natural logarithms.',action='store_true')
        subcommand.add_argument('--reference',help='Attach the certified reference remainder.',action='store_true')
        subcommand.add_argument('--format',help='The output format.',default='json',choices=['json','text'])
        subcommand.add_argument('--cache',help="The cache directory of the zonal tables, or 'none'. Default $STIEFEL_NORM_CACHE or ~/.stiefelnorm.",default=None)

    def phi(self):
        '''
        Subcommand phi, which computes the matrix Bingham constant.
        '''
        subcommand=self.add_subcommand('phi',cmdphi,help='The matrix Bingham constant.')
        subcommand.add_argument('--a',help='The json file of the p*p matrix A.',required=True)
        subcommand.add_argument('--sigma',help='The json file of the d*d matrix Sigma.',required=True)
        self.add_series(subcommand)

    def psi(self):
        '''
        Subcommand psi, which computes the matrix Langevin constant.
        '''
        subcommand=self.add_subcommand('psi',cmdpsi,help='The matrix Langevin constant.')
        subcommand.add_argument('--b',help='The json file of the d*p matrix B.',required=True)
        self.add_series(subcommand)

    def zonal(self):
        '''
        Subcommand zonal, which dumps the zonal coefficients.
        '''
        subcommand=self.add_subcommand('zonal',cmdzonal,help='The exact zonal coefficients.')
        subcommand.add_argument('-w','--weight',help='The weight of the partitions. Default the weight of --kappa.',type=int,default=None)
        subcommand.add_argument('--kappa',help="Only the partition with this literal, e.g. 'κ=[3,1,1]'.",default=None)
        subcommand.add_argument('-l','--maxlen',help='The maximum length of the partitions. Default the weight.',type=int,default=None)
        subcommand.add_argument('--format',help='The output format.',default='json',choices=['json','csv','text'])
        subcommand.add_argument('--cache',help="The cache directory of the zonal tables, or 'none'.",default=None)

    def boundstable(self):
        '''
        Subcommand bounds-table, which tabulates the upper bounds over a grid of d and m.
        '''
        subcommand=self.add_subcommand('bounds-table',cmdboundstable,help='The upper bounds over a grid of d and m.')
        subcommand.add_argument('--kind',help='The normalizing constant.',default='phi',choices=['phi','psi'])
        subcommand.add_argument('--d',help="The grid of d, 'start:stop:lin|log|dyadic' or a single value.",required=True)
        subcommand.add_argument('--m',help="The grid of m, 'start:stop:lin|log|dyadic' or a single value.",required=True)
        subcommand.add_argument('-p','--p',help='The number of columns.',type=int,default=1)
        subcommand.add_argument('--a',help='The json file of A for phi. Default tr(A_+) given by --tra.',default=None)
        subcommand.add_argument('--tra',help='The value of tr(A_+) for phi when --a is absent.',type=float,default=1.0)
        subcommand.add_argument('--sigma',help='The scale s of Sigma=s*I_d for the growth flag and the lower bound of phi.',type=float,default=None)
        subcommand.add_argument('--b',help='The json file of B for psi, padded with zero rows up to each d, for the growth flag and the lower bound.',default=None)
        subcommand.add_argument('--gamma0',help='The growth prefactor.',type=float,default=1.0)
        subcommand.add_argument('-r','--r',help='The growth exponent.',type=float,default=0.0)
        subcommand.add_argument('--log',help='Report the bounds as natural logarithms.',action='store_true')

    def validate(self):
        '''
        Subcommand validate, which runs the inequality suite.
        '''
        subcommand=self.add_subcommand('validate',cmdvalidate,help='The inequality suite.')
        subcommand.add_argument('--max-weight',help='The maximum weight of the random partitions.',type=int,default=4,dest='maxweight')
        subcommand.add_argument('--dims',help='The dimensions d, separated by commas.',default='2,3,4,6,8')
        subcommand.add_argument('--seed',help='The seed.',type=int,default=SEED)
        subcommand.add_argument('--count',help='The number of the random instances per check.',type=int,default=NSAMPLE)
        subcommand.add_argument('--json',help='Report in json instead of text.',action='store_true')

    def mccheck(self):
        '''
        Subcommand mc-check, which compares a constant with the Monte Carlo oracle.
        '''
        subcommand=self.add_subcommand('mc-check',cmdmccheck,help='The comparison with the Monte Carlo oracle.')
        subcommand.add_argument('--d',help='The number of rows.',type=int,required=True)
        subcommand.add_argument('--p',help='The number of columns.',type=int,required=True)
        subcommand.add_argument('--samples',help='The number of the samples.',type=int,default=10**6)
        subcommand.add_argument('--seed',help='The seed.',type=int,default=SEED)
        subcommand.add_argument('-m','--m',help='The truncation order of the compared series.',type=int,default=6)
        subcommand.add_argument('--a',help='The json file of A.',default=None)
        subcommand.add_argument('--sigma',help='The json file of Sigma.',default=None)
        subcommand.add_argument('--b',help='The json file of B.',default=None)
        subcommand.add_argument('--cache',help="The cache directory of the zonal tables, or 'none'.",default=None)

    def execute(self):
        '''
        Execute the command line commands this manager manages.

        Returns
        -------
        int
            The exit code.
        '''
        namespace=self.parser.parse_args(self.args[1:] or ['-h'])
        Log.ON=not namespace.quiet
        return namespace.subcommand(namespace,self.out)

def _config_(namespace):
    return OrderedDict(sorted((key,value) for key,value in vars(namespace).items() if key not in ('subcommand','quiet')))

def _cache_(value):
    if value is None: return True
    return None if value.lower()=='none' else value

def provenance(namespace,seed=None,key=None):
    '''
    The provenance header of a run.

    Parameters
    ----------
    namespace : Namespace
        The parsed arguments.
    seed : int, optional
        The seed of the run.
    key : str, optional
        The cache key of the zonal table used by the run.

    Returns
    -------
    OrderedDict
        The version, the seed, the cache key and the config hash.
    '''
    return OrderedDict([('version',VERSION),('seed',seed),('cache_key',key),('config_hash',confighash(_config_(namespace)))])

def _dumpjson_(header,result,out):
    out.write(json.dumps(OrderedDict([('provenance',header),('result',result)]),indent=2))
    out.write('\n')

def _dumptext_(header,text,out):
    for key,value in header.items(): out.write('# %s: %s\n'%(key,value))
    out.write(text)
    out.write('\n')

def parsegrid(spec):
    '''
    Parse a grid of positive integers.

    Parameters
    ----------
    spec : str
        'start:stop:lin' for all the integers in [start,stop], 'start:stop:dyadic' for start*2^j<=stop,
        'start:stop:log' or 'start:stop:log:n' for the distinct rounded points of a geometric progression with n points per decade (default 10),
        or a single integer.

    Returns
    -------
    list of int
        The grid in increasing order.
    '''
    fields=spec.split(':')
    try:
        if len(fields)==1: return [int(fields[0])]
        if len(fields) not in (3,4): raise ValueError('three or four fields expected')
        start,stop,kind=int(fields[0]),int(fields[1]),fields[2]
        if not 1<=start<=stop: raise ValueError('1<=start<=stop required')
        if kind=='lin' and len(fields)==3: return list(range(start,stop+1))
        if kind=='dyadic' and len(fields)==3: return [start*2**j for j in range(int(np.log2(stop/start))+2) if start*2**j<=stop]
        if kind=='log':
            n=int(fields[3]) if len(fields)==4 else 10
            if n<1: raise ValueError('positive points per decade required')
            points=np.geomspace(start,stop,int(np.ceil(n*np.log10(stop/start)))+1) if stop>start else [start]
            return sorted(set(int(round(point)) for point in points))
        raise ValueError('unknown spacing %r'%kind)
    except ValueError as error:
        raise InputError('parsegrid error: malformed grid %r(%s).'%(spec,error))

def _series_(engine,namespace,approx,selectm,out):
    selection=None
    if namespace.tol is not None: selection=engine.register(SELECTM(name='SELECTM',tol=namespace.tol,mmax=namespace.mmax,run=selectm))
    report=engine.register(APPROX(name='APPROX',log=namespace.log,reference=namespace.reference,run=approx))
    result=report.tojson()
    if selection is not None:
        result['selection']=OrderedDict([('found',selection.found),('m',selection.m),('bound',selection.bound),('minimum',selection.minimum),('argmin',selection.argmin)])
    header=provenance(namespace,key=engine.zonal.key if engine.zonal is not None else None)
    if namespace.format=='json':
        _dumpjson_(header,result,out)
    else:
        _dumptext_(header,report.tostr(),out)
    return EXIT_OK

def cmdphi(namespace,out):
    '''
    Compute the matrix Bingham constant with the bounds of its remainder.
    '''
    A,Sigma=readmatrix(namespace.a),readmatrix(namespace.sigma)
    engine=Bingham(A,Sigma,m=namespace.m,kmax=namespace.kmax,gamma0=namespace.gamma0,r=namespace.r,mode=namespace.mode,cache=_cache_(namespace.cache),name='phi')
    return _series_(engine,namespace,BinghamAPPROX,BinghamSELECTM,out)

def cmdpsi(namespace,out):
    '''
    Compute the matrix Langevin constant with the bounds of its remainder.
    '''
    B=readmatrix(namespace.b,symmetric=False)
    engine=Langevin(B,m=namespace.m,kmax=namespace.kmax,gamma0=namespace.gamma0,r=namespace.r,mode=namespace.mode,cache=_cache_(namespace.cache),name='psi')
    return _series_(engine,namespace,LangevinAPPROX,LangevinSELECTM,out)

def cmdzonal(namespace,out):
    '''
    Dump the exact zonal coefficients of a weight.
    '''
    kappa=None if namespace.kappa is None else Partition.fromstr(namespace.kappa)
    if kappa is None and namespace.weight is None: raise InputError('cmdzonal error: either --weight or --kappa is required.')
    weight=kappa.weight if namespace.weight is None else namespace.weight
    if kappa is not None and kappa.weight!=weight: raise InputError('cmdzonal error: the weight(%s) of %s differs from --weight(%s).'%(kappa.weight,kappa,weight))
    maxlen=weight if namespace.maxlen is None else namespace.maxlen
    if weight<0 or maxlen<1: raise InputError('cmdzonal error: weight>=0 and maxlen>=1 are required.')
    if kappa is not None and kappa.length>maxlen: raise InputError('cmdzonal error: %s is longer than maxlen(%s).'%(kappa,maxlen))
    table=zonaltable(weight,maxlen,cache=_cache_(namespace.cache))
    header=provenance(namespace,key=table.key)
    if namespace.format=='json':
        _dumpjson_(header,table.tojson(weight,kappa),out)
    elif namespace.format=='text':
        _dumptext_(header,table.tostr(weight,kappa),out)
    else:
        for key,value in header.items(): out.write('# %s: %s\n'%(key,value))
        writer=csv.writer(out,lineterminator='\n')
        writer.writerow(['kappa','lambda','num','den'])
        for part,lamda,coeff in table.items(weight,kappa):
            writer.writerow([repr(part),repr(lamda),coeff.numerator,coeff.denominator])
    return EXIT_OK

def cmdboundstable(namespace,out):
    '''
    Tabulate the upper bounds over a grid of d (outer) and m (inner) as csv.
    '''
    ds,ms=parsegrid(namespace.d),parsegrid(namespace.m)
    if min(ms)<2: raise InputError('cmdboundstable error: the grid of m must start at 2 or above.')
    p,g=namespace.p,GrowthParams(namespace.gamma0,namespace.r)
    if namespace.kind=='phi':
        A=readmatrix(namespace.a) if namespace.a is not None else SymmetricMatrix(np.diag([namespace.tra]+[0.0]*(p-1)))
        if A.n!=p: raise InputError('cmdboundstable error: A must be %s*%s, got %s*%s.'%(p,p,A.n,A.n))
    B=None
    if namespace.kind=='psi' and namespace.b is not None:
        B=readmatrix(namespace.b,symmetric=False)
        if B.p!=p: raise InputError('cmdboundstable error: B must have %s columns, got %s.'%(p,B.p))
    if namespace.sigma is not None and not namespace.sigma>=0: raise InputError('cmdboundstable error: the scale of Sigma(%s) must be nonnegative.'%namespace.sigma)
    if min(ds)<max(p,0 if B is None else B.d): raise InputError('cmdboundstable error: the grid of d must not go below p(%s) or the rows of B.'%p)
    for key,value in provenance(namespace).items(): out.write('# %s: %s\n'%(key,value))
    writer=csv.writer(out,lineterminator='\n')
    writer.writerow(['d','p','m','t','upper_series','upper_closed','lower','flags'])
    for d in ds:
        if namespace.kind=='phi':
            M=None if namespace.sigma is None else SymmetricMatrix(namespace.sigma*np.eye(d))
            positive=M is not None and namespace.sigma>0 and bool(eigensym(A).values[-1]>0)
        else:
            M=None if B is None else RectMatrix(np.vstack([B.entries,np.zeros((d-B.d,p))]))
            positive=M is not None
        for m in ms:
            if namespace.kind=='phi':
                report=phi_upper(m,A,d,p,g,Sigma=M,log=namespace.log)
                lower=phi_lower(m,A,M,d,p,log=namespace.log) if positive else None
            else:
                report=psi_upper(m,d,p,g,B=M,log=namespace.log)
                try:
                    lower=psi_lower(m,M,d,p,log=namespace.log)[0] if positive else None
                except DomainError:
                    lower=None
            flags=';'.join('%s=%s'%(key,str(value).lower()) for key,value in report.flags.items() if value is not None)
            writer.writerow([d,p,m,floattostr(report.t),floattostr(report.upper_series),floattostr(report.upper_closed),floattostr(lower),flags])
    return EXIT_OK

def cmdvalidate(namespace,out):
    '''
    Run the inequality suite. The exit code is 4 when any check fails.
    '''
    try:
        dims=tuple(int(d) for d in namespace.dims.split(','))
    except ValueError:
        raise InputError('cmdvalidate error: malformed dims(%r).'%namespace.dims)
    results=suite(maxweight=namespace.maxweight,dims=dims,seed=namespace.seed,count=namespace.count,log=Log())
    header=provenance(namespace,seed=namespace.seed)
    if namespace.json:
        _dumpjson_(header,OrderedDict((name,[result.tojson() for result in group]) for name,group in results.items()),out)
    else:
        _dumptext_(header,summary(results),out)
    failures=[result for group in results.values() for result in group if not result.passed]
    if failures:
        sys.stderr.write('validate: %s failure(s), first witness %r\n'%(len(failures),failures[0]))
        return EXIT_VALIDATION
    return EXIT_OK

def cmdmccheck(namespace,out):
    '''
    Compare a constant with the Monte Carlo oracle. The exit code is 4 when they disagree.
    '''
    if namespace.b is not None and (namespace.a is not None or namespace.sigma is not None):
        raise InputError('cmdmccheck error: --b excludes --a and --sigma.')
    if namespace.b is not None:
        B=readmatrix(namespace.b,symmetric=False)
        if B.shape!=(namespace.d,namespace.p): raise InputError('cmdmccheck error: B must be %s*%s, got %s*%s.'%((namespace.d,namespace.p)+B.shape))
        engine,run=Langevin(B,m=namespace.m,cache=_cache_(namespace.cache),name='mc-check'),LangevinMCCHECK
    elif namespace.a is not None and namespace.sigma is not None:
        A,Sigma=readmatrix(namespace.a),readmatrix(namespace.sigma)
        if A.n!=namespace.p or Sigma.n!=namespace.d: raise InputError('cmdmccheck error: A and Sigma must be %s*%s and %s*%s.'%(namespace.p,namespace.p,namespace.d,namespace.d))
        engine,run=Bingham(A,Sigma,m=namespace.m,cache=_cache_(namespace.cache),name='mc-check'),BinghamMCCHECK
    else:
        raise InputError('cmdmccheck error: either --b or both --a and --sigma are required.')
    result=engine.register(MCCHECK(name='MCCHECK',samples=namespace.samples,seed=namespace.seed,run=run))
    _dumpjson_(provenance(namespace,seed=namespace.seed,key=engine.zonal.key),result.tojson(),out)
    return EXIT_OK if result.agree() else EXIT_VALIDATION

def main(argv=None,out=None):
    '''
    The entry of the command line interface.

    Parameters
    ----------
    argv : list of str, optional
        The arguments without the program name. Default the arguments of the process.
    out : file, optional
        The stream of the results. Default the stdout.

    Returns
    -------
    int
        The exit code.
    '''
    args=sys.argv if argv is None else ['stiefelnorm']+list(argv)
    try:
        return Manager(args,out=out).execute()
    except SystemExit as error:
        return error.code if isinstance(error.code,int) else EXIT_INPUT
    except (InputError,DomainError) as error:
        sys.stderr.write('%s\n'%error)
        return EXIT_INPUT
    except ResourceError as error:
        sys.stderr.write('%s\n'%error)
        return EXIT_RESOURCE
