#!/usr/bin/env python3
# Copyright (c) 2026 The chainlens developers
# Distributed under the MIT software license, see the accompanying
# file COPYING or http://www.opensource.org/licenses/mit-license.php.
"""Reference vectors for the hashing and address-derivation tests.

Independent of the C++ code: Keccak comes from pycryptodome and RLP is
written here straight from the encoding rules. Run once; the output is
checked in under tests/fixtures/ and the C++ tests compare against it.
"""
import json
import pathlib

from Crypto.Hash import keccak


def k256(data: bytes) -> bytes:
    h = keccak.new(digest_bits=256)
    h.update(data)
    return h.digest()


def rlp_bytes(b: bytes) -> bytes:
    if len(b) == 1 and b[0] < 0x80:
        return b
    if len(b) <= 55:
        return bytes([0x80 + len(b)]) + b
    n = len(b).to_bytes((len(b).bit_length() + 7) // 8, "big")
    return bytes([0xB7 + len(n)]) + n + b


def rlp_int(v: int) -> bytes:
    return rlp_bytes(b"" if v == 0 else v.to_bytes((v.bit_length() + 7) // 8, "big"))


def rlp_list(items) -> bytes:
    body = b"".join(items)
    if len(body) <= 55:
        return bytes([0xC0 + len(body)]) + body
    n = len(body).to_bytes((len(body).bit_length() + 7) // 8, "big")
    return bytes([0xF7 + len(n)]) + n + body


def contract_address(sender_hex: str, nonce: int) -> str:
    sender = bytes.fromhex(sender_hex[2:])
    return "0x" + k256(rlp_list([rlp_bytes(sender), rlp_int(nonce)]))[12:].hex()


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

    keccak_inputs = {
        "empty": b"",
        "abc": b"abc",
        "zero64": bytes(64),
        "len135": bytes(range(135)),
        "len136": bytes(range(136)),
        "len137": bytes(range(137)),
        "len300": bytes((i * 7 + 3) % 256 for i in range(300)),
    }
    keccak_vectors = [
        {"name": n, "input": data.hex(), "digest": k256(data).hex()} for n, data in keccak_inputs.items()
    ]

    signatures = ["kill()", "Kill()", "suicide()", "end()", "destroy()", "done()", "delete()",
                  "redeem()", "terminate()", "remove()", "close()", "shutdown()", "selfDestruct()",
                  "destruct()", "die()", "transfer(address,uint256)"]
    selector_vectors = [{"signature": s, "selector": k256(s.encode()).hex()[:8]} for s in signatures]

    a = "0x6ac7ea33f8831ea9dcc53393aaa88b25a785dbf0"
    b = "0x0000000000000000000000000000000000000000"
    c = "0xffffffffffffffffffffffffffffffffffffffff"
    d = "0x1f9840a85d5af5bf1d1762f925bdaddc4201f984"
    cases = [(a, 0), (a, 1), (a, 2), (a, 3), (b, 0), (c, 127), (c, 128), (d, 255), (d, 256),
             (d, 2**32 + 1)]
    address_vectors = [
        {"sender": s, "nonce": n, "rlp": rlp_list([rlp_bytes(bytes.fromhex(s[2:])), rlp_int(n)]).hex(),
         "address": contract_address(s, n)}
        for s, n in cases
    ]

    (out / "keccak_vectors.json").write_text(json.dumps({
        "keccak256": keccak_vectors,
        "selectors": selector_vectors,
        "contract_addresses": address_vectors,
    }, indent=2) + "\n")


if __name__ == "__main__":
    main()
