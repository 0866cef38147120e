"""
RIS级联信道估计工具包

面向RIS辅助毫米波MIMO上行的稀疏级联信道估计：
结构化稀疏信道生成、导频观测合成、基于UAMP-SBL的估计算法与蒙特卡洛评测。
"""

__version__ = "1.0.0"
__description__ = "RIS级联信道估计工具包"
