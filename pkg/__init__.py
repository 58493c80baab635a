"""
Spline Dimension Verifier - 样条维数精确验证系统

用精确有理运算验证平面三角剖分上样条空间维数、K(r) 维数及相关结构矩阵结论
"""

__version__ = "1.0.0"
