"""
整数ベクトル・弱組成・分割モジュール

入力の検証とゼロ詰め、探索用の列挙を行う
"""

from itertools import product
from typing import Iterator, Sequence, Tuple

from ..utils.errors import BadShape, DimensionMismatch, NegativePart


IntVector = Tuple[int, ...]
WeakComposition = Tuple[int, ...]
Partition = Tuple[int, ...]


def pad(vector: Sequence[int], length: int) -> IntVector:
    """
    長さ length にゼロ詰めする

    末尾のゼロを越えて長い場合は DimensionMismatch
    """
    vector = tuple(int(x) for x in vector)
    if len(vector) > length:
        if any(vector[length:]):
            raise DimensionMismatch(f"{vector} は長さ {length} に収まりません")
        return vector[:length]
    return vector + (0,) * (length - len(vector))


def as_weak_composition(a: Sequence[int]) -> WeakComposition:
    a = tuple(int(x) for x in a)
    if any(part < 0 for part in a):
        raise NegativePart(f"弱組成に負の成分があります: {a}")
    return a


def as_partition(lam: Sequence[int]) -> Partition:
    lam = tuple(int(x) for x in lam)
    if any(part < 0 for part in lam):
        raise BadShape(f"分割に負のパートがあります: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise BadShape(f"分割は広義単調減少である必要があります: {lam}")
    return lam


def strip_zeros(lam: Sequence[int]) -> Partition:
    """末尾のゼロを除く"""
    lam = tuple(lam)
    end = len(lam)
    while end and lam[end - 1] == 0:
        end -= 1
    return lam[:end]


def length(lam: Sequence[int]) -> int:
    """ℓ(λ): 非ゼロのパート数"""
    return sum(1 for part in lam if part)


def vplus(v: Sequence[int]) -> IntVector:
    """成分を広義単調減少に並べ替える"""
    return tuple(sorted(v, reverse=True))


# --- 列挙（ハーネスの固定順序） ---

def compositions(n: int, a_max: int) -> Iterator[WeakComposition]:
    """{0..a_max}^n を辞書式順に"""
    return (tuple(a) for a in product(range(a_max + 1), repeat=n))


def partitions(size: int, max_len: int, max_part: int) -> Iterator[Partition]:
    """
    size の分割を長さ max_len 以下・パート max_part 以下で列挙する

    パートを大きい順に選ぶ辞書式の逆順（(4), (3,1), (2,2), …）
    """
    def build(remaining: int, cap: int, slots: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in build(remaining - first, first, slots - 1):
                yield (first,) + rest

    return build(size, max_part, max_len)


def partitions_up_to(size_max: int, max_len: int, max_part: int) -> Iterator[Partition]:
    """サイズ 0..size_max の分割をサイズ順に"""
    for size in range(size_max + 1):
        yield from partitions(size, max_len, max_part)


def integer_vectors(n: int, total: int, v_min: int, v_max: int) -> Iterator[IntVector]:
    """成分が v_min..v_max で和が total の整数ベクトルを辞書式順に"""
    for v in product(range(v_min, v_max + 1), repeat=n):
        if sum(v) == total:
            yield tuple(v)
