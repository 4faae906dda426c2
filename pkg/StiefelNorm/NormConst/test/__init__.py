from .test_NormConst import *
