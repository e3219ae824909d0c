from .parallel import map_ordered
