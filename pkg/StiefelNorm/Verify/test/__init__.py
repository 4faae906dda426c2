from .test_Verify import *
