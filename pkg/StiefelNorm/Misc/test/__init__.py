from .test_Linalg import *
from .test_Random import *
