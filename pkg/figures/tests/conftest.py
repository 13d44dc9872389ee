import os
import sys

# make the recipes importable straight from the checkout, installed or not
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
