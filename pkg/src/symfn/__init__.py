"""Alphabets and complete homogeneous symmetric functions module"""
from .alphabet import Alphabet, Letter, alphabet_augmented, alphabet_plain
from .complete import hcomplete, hcomplete_bruteforce

__all__ = [
    "Alphabet",
    "Letter",
    "alphabet_plain",
    "alphabet_augmented",
    "hcomplete",
    "hcomplete_bruteforce",
]
