"""
exactreal - exact real arithmetic in the bit-cost model
"""
__version__ = "1.0.0"
