"""
例外定義モジュール

代数カーネルとハーネスで共通に使う例外クラス
"""


class QDysonError(Exception):
    """全例外の基底クラス"""


# --- 代数的な失敗 ---

class AlgebraError(QDysonError, ArithmeticError):
    """代数演算の失敗"""


class NonExactDivision(AlgebraError):
    """割り切れない除算（恒等式が偽であることを示す場合もある）"""


class ZeroDenominator(AlgebraError, ZeroDivisionError):
    """分母がゼロ"""


class PoleAtPoint(AlgebraError, ZeroDivisionError):
    """評価点が極に当たった（別の点で再試行する）"""


# --- 形状・引数の不整合 ---

class ShapeError(QDysonError, ValueError):
    """入力の形状・範囲が不正"""


class RingMismatch(ShapeError):
    """変数の個数が異なる多項式同士の演算"""


class DimensionMismatch(ShapeError):
    """ベクトル長が環の次元と一致しない"""


class NotAMonomial(ShapeError):
    """単項式であるべき引数が多項"""


class NegativePart(ShapeError):
    """弱組成に負の成分がある"""


class IndexOutOfRange(ShapeError):
    """添字が 1..n の範囲外"""


class BadShape(ShapeError):
    """ベクトルの和や形が公式の前提を満たさない"""


class RangeViolation(ShapeError):
    """パラメータが恒等式の成立範囲外"""


class SizeMismatch(ShapeError):
    """サイズの異なる分割同士の比較"""


class NotApplicable(ShapeError):
    """要求された計算方法がこの入力に使えない"""
