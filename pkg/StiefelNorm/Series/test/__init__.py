from .test_Series import *
