"""
relbgg: homologia relativa e absoluta de subálgebras parabólicas aninhadas
q ⊂ p ⊂ g em aritmética racional exata.
"""

__version__ = "1.0.0"
