from .runs import *
