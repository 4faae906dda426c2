from .test_Management import *
