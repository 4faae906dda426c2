from .test_Bounds import *
from .test_Reference import *
