"""involute-tower - involutes of plane curves and the sine/cosine series they unroll."""

__version__ = "0.1.0"
