from .lattice import *
from .isometry import *
from .wallpaperGroup import *
from .markedTile import *
from .tileCollection import TileCollection
