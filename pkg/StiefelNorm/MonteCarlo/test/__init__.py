from .test_StiefelMC import *
