"""
harmoniq 异常类型

所有模块抛出的异常都继承自 HarmoniqError，命令行根据类型映射退出码。
"""

from typing import Optional


class HarmoniqError(Exception):
    """harmoniq 的基础异常"""


class ValidationError(HarmoniqError, ValueError):
    """参数、量子比特索引或选择器不合法"""


class CapExceededError(ValidationError):
    """稠密模拟超出规模上限"""


class RegisterMismatchError(ValidationError):
    """拼接电路时寄存器布局不一致"""


class CircuitParseError(ValidationError):
    """
    电路文档解析失败

    Args:
        message (str): 错误描述
        position (Optional[int]): 出错位置（字符偏移或门序号）
        token (Optional[str]): 出错的记号
    """

    def __init__(self, message: str, position: Optional[int] = None, token: Optional[str] = None):
        detail = message
        if token is not None:
            detail += f" (记号 {token!r})"
        if position is not None:
            detail += f" (位置 {position})"
        super().__init__(detail)
        self.position = position
        self.token = token


class ImpossibleOutcomeError(HarmoniqError):
    """后选择结果的概率低于 1e-300"""


class InfeasibleTargetError(ValidationError):
    """优化网格中没有满足误差要求的点"""


class VerificationError(HarmoniqError):
    """验证套件发现不变量被破坏"""
