"""
单元测试模块
"""