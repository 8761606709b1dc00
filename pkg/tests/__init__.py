"""
harmoniq 测试
"""
