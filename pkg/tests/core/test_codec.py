import unittest
from fractions import Fraction

from src.riesz.lattice import (
    TAIL_SEQ,
    Carrier,
    CarrierMismatchError,
    RationalFormatError,
    Vec,
    decode_carrier,
    decode_vec,
    encode_carrier,
    encode_vec,
)


class CodecTest(unittest.TestCase):
    """Unit tests for the JSON form of carriers and elements."""

    def test_encode_vec(self) -> None:
        self.assertEqual(["1", "-1/2"], encode_vec(Vec.fin_dim([1, Fraction(-1, 2)])))
        self.assertEqual(
            {"prefix": ["0", "3"], "tail": "1"},
            encode_vec(Vec.tail_seq([0, 3, 1, 1], 1)),
        )

    def test_decode_vec(self) -> None:
        self.assertEqual(Vec.fin_dim([1, Fraction(2, 3)]), decode_vec(["1", "2/3"]))
        self.assertEqual(Vec.tail_seq([1], 0), decode_vec({"prefix": [1, "0"], "tail": "0"}))

    def test_exception_raised_when_decoding_malformed_vec(self) -> None:
        for data in [[], {"prefix": []}, {"prefix": "1", "tail": "0"}, "1", None]:
            with self.subTest(data=data), self.assertRaises(ValueError):
                _ = decode_vec(data)
        with self.assertRaises(RationalFormatError):
            _ = decode_vec(["1.5"])

    def test_exception_raised_when_vec_is_in_another_carrier(self) -> None:
        with self.assertRaises(CarrierMismatchError):
            _ = decode_vec(["1", "2"], Carrier.fin_dim(3))
        with self.assertRaises(CarrierMismatchError):
            _ = decode_vec(["1"], TAIL_SEQ)

    def test_carrier_forms(self) -> None:
        for carrier, data in [
            (Carrier.fin_dim(3), {"kind": "fin-dim", "dimension": 3}),
            (TAIL_SEQ, {"kind": "tail-seq"}),
        ]:
            with self.subTest(carrier=carrier):
                self.assertEqual(data, encode_carrier(carrier))
                self.assertEqual(carrier, decode_carrier(data))

    def test_exception_raised_when_decoding_malformed_carrier(self) -> None:
        for data in [
            {"kind": "fin-dim"},
            {"kind": "fin-dim", "dimension": True},
            {"kind": "tail-seq", "dimension": 2},
            {"kind": "l-infinity"},
            [],
        ]:
            with self.subTest(data=data), self.assertRaises(ValueError):
                _ = decode_carrier(data)
