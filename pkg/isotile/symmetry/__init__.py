from .torusTiling import *
from .theorems import *
from .symmetryClassifier import *
from .counting import *
