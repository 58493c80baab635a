"""
Spline Dimension Verifier 测试包
"""
