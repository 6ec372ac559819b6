#!/usr/bin/env python3
# Copyright (c) 2026 The chainlens developers
# Distributed under the MIT software license, see the accompanying
# file COPYING or http://www.opensource.org/licenses/mit-license.php.
"""Gas-fixture script for the termination probe, with the expected outcome
of every contract written down next to its fixture lines."""
import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))
from gen_vectors import k256  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
THRESHOLD = 21000

NAMED = ["kill()", "suicide()", "end()", "destroy()", "done()", "delete()", "redeem()", "terminate()", "remove()"]
RAW = ["0x43d726d6", "0xfc0e74d1", "0x9cb8a26a", "0x2b68b9c6", "0x35f46994"]
SELECTORS = ["0x" + k256(s.encode())[:4].hex() for s in NAMED] + RAW
SEL = dict(zip(NAMED, SELECTORS))

CALLER = "0x" + "00" * 18 + "ca11"
CREATOR = "0x" + "cc" * 20
THIRD = "0x" + "44" * 20


def addr(n: int) -> str:
    return "0x" + ("%02x" % n) * 20


lines = []
expected = []


def gas(contract, selector, estimate, terminates=False, refund_to=None, error=None):
    rec = {"type": "gas_fixture", "address": contract, "selector": selector, "estimate": estimate}
    if terminates:
        rec["terminates"] = True
    if refund_to is not None:
        rec["refund_to"] = refund_to
    if error is not None:
        rec["error"] = error
    lines.append(rec)


def expect(contract, probed, confirmed=False, trigger=None, refund="none", refund_address=None,
           suspicious=False, vulnerable=0, failure=None):
    expected.append({"contract": contract, "creator": CREATOR, "probed": probed, "confirmed": confirmed,
                     "trigger": trigger, "refund": refund, "refund_address": refund_address,
                     "suspicious": suspicious, "vulnerable": vulnerable, "failure": failure})


# Estimates at or above the threshold everywhere: never invoked.
c = addr(0x11)
gas(c, SEL["kill()"], 30000)
gas(c, SEL["suicide()"], THRESHOLD)
expect(c, probed=False)

# First candidate survives, second terminates and pays the caller.
c = addr(0x12)
gas(c, SEL["end()"], 20000)
gas(c, SEL["done()"], 19000, True, "caller")
expect(c, True, True, SEL["done()"], "caller", vulnerable=2)

# Pays the creator.
c = addr(0x13)
gas(c, SEL["kill()"], 15000, True, CREATOR)
expect(c, True, True, SEL["kill()"], "creator", vulnerable=1)

# Pays a third party.
c = addr(0x14)
gas(c, SEL["suicide()"], 15000, True, THIRD)
expect(c, True, True, SEL["suicide()"], "other", THIRD, vulnerable=1)

# Cheap for every selector yet never terminates: a catch-all default function.
c = addr(0x15)
for s in SELECTORS:
    gas(c, s, 100)
expect(c, True, False, SEL["kill()"], "none", suspicious=True, vulnerable=14)

# Terminates without a beneficiary.
c = addr(0x16)
gas(c, SEL["destroy()"], 500, True)
expect(c, True, True, SEL["destroy()"], "null_address", vulnerable=1)

# Cheap for 13 of 14 selectors, never terminates: not flagged.
c = addr(0x17)
for s in SELECTORS[:-1]:
    gas(c, s, 100)
gas(c, SELECTORS[-1], 50000)
expect(c, True, False, SEL["kill()"], "none", vulnerable=13)

# No fixture at all.
expect(addr(0x18), probed=False)

# The executor fails; only this contract is affected.
c = addr(0x19)
gas(c, SEL["kill()"], 100, error="execution node timed out")
expect(c, probed=False, failure="execution node timed out")

(OUT / "probe_gas.ndjson").write_text("".join(json.dumps(l) + "\n" for l in lines))
(OUT / "probe_expected.json").write_text(json.dumps(
    {"caller": CALLER, "threshold": THRESHOLD, "selectors": SELECTORS, "contracts": expected}, indent=2) + "\n")
