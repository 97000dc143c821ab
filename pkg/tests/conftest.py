import os
import sys

# make the shared test tables importable regardless of invocation directory
sys.path.insert(0, os.path.dirname(__file__))
