from lis312.oracle.enumerate import class_size, enumerate_class, lis_histogram
from lis312.oracle.verify import Mismatch, NOutcome, VerificationReport, verify_series

__all__ = [
    "enumerate_class",
    "class_size",
    "lis_histogram",
    "Mismatch",
    "NOutcome",
    "VerificationReport",
    "verify_series",
]
