from .test_Partition import *
from .test_Zonal import *
