from .svgRenderer import *
from .tables import *
