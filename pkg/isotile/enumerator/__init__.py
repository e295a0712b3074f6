from .tileSearch import *
from .specialCases import *
from .tileEnumerator import *
