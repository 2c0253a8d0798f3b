"""
Core numerics for xx_entropy
"""
