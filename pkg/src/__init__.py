"""
q-Dyson 定数項検証カーネル

一般化 q-Dyson 定数項を全展開で正確に計算し、積公式・漸化式・部分分数分解などの
恒等式と照合するツール
"""

__version__ = "1.0.0"
__author__ = "qdyson developers"
