from .test_Utilities import *
from .test_EngineApp import *
