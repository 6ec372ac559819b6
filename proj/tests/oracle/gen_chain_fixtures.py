#!/usr/bin/env python3
# Copyright (c) 2026 The chainlens developers
# Distributed under the MIT software license, see the accompanying
# file COPYING or http://www.opensource.org/licenses/mit-license.php.
"""Labelled Namecoin and Peercoin ledgers with hand-counted answers.

The expected tables are written out literally below; the script only
checks them against a straightforward recount before saving.
"""
import datetime
import hashlib
import json
import pathlib

BASE = 1362355200  # 2013-03-04T00:00:00Z, a Monday (ISO 2013-W10)
HOUR, DAY = 3600, 86400


def h(tag: str) -> str:
    return "0x" + hashlib.sha256(tag.encode()).hexdigest()


def namecoin():
    new, fu, up = "new", "firstupdate", "update"
    # (height, time, auxpow, [(tag, op, name, fee)])
    blocks = [
        (19100, BASE + HOUR, False, [("n1", new, None, 1000000), ("p1", None, None, 0)]),
        (19150, BASE + 2 * DAY, False, [("fu1", fu, "d/alpha", 500000)]),
        (19200, BASE + 7 * DAY + HOUR, True, [("u1", up, "d/alpha", 500000), ("n2", new, None, 1000000)]),
        (19210, BASE + 8 * DAY, True, [("fu2", fu, "d/beta", 2500500000)]),
        (19320, BASE + 9 * DAY, None, [("fz", fu, "d/zeta", 500000), ("fe", fu, "d/eta", 500000),
                                       ("p2", None, None, 0)]),
        (19400, BASE + 14 * DAY, True, [("fu3", fu, "d/alpha", 500000), ("fu4", fu, "d/gamma", 500000),
                                        ("ue", up, "d/eta", 500000)]),
        (19405, BASE + 14 * DAY + HOUR, True, [("fu5", fu, "d/beta", 500000), ("u2", up, "d/delta", 500000)]),
        (19450, BASE + 14 * DAY + 2 * HOUR, True, [("fu6", fu, "d/zeta", 500000), ("fu7", fu, "d/eta", 500000)]),
    ]
    lines = []
    parent = h("nmc-genesis")
    for height, time, aux, txs in blocks:
        bh = h(f"nmc-{height}")
        blk = {"type": "block", "chain": "nmc", "height": height, "hash": bh, "parent": parent, "time": time,
               "txs": [h(t[0]) for t in txs]}
        if aux is not None:
            blk["auxpow"] = aux
        lines.append(blk)
        parent = bh
        for i, (tag, op, name, fee) in enumerate(txs):
            tx = {"type": "tx", "chain": "nmc", "hash": h(tag), "height": height, "index": i,
                  "from": "N" + tag, "to": "Nrecipient", "value": "100000000", "input": "0x", "fee": "100000"}
            if op:
                payload = {"kind": op, "paid_fee": str(fee)}
                if op == new:
                    payload["name_hash"] = h("salted-" + tag)
                else:
                    payload["name"] = name
                tx["name_op"] = payload
            lines.append(tx)

    expected = {
        "mergemine": [
            {"label": "blocks", "normal": 3, "merged": 5},
            {"label": "transactions", "normal": 6, "merged": 10},
            {"label": "new", "normal": 1, "merged": 1},
            {"label": "firstupdate", "normal": 3, "merged": 6},
            {"label": "update", "normal": 0, "merged": 3},
        ],
        "weekly_fees": [
            {"week": "2013-W10", "kind": "new", "paid": "1000000"},
            {"week": "2013-W10", "kind": "firstupdate", "paid": "500000"},
            {"week": "2013-W10", "kind": "update", "paid": "0"},
            {"week": "2013-W11", "kind": "new", "paid": "1000000"},
            {"week": "2013-W11", "kind": "firstupdate", "paid": "2501500000"},
            {"week": "2013-W11", "kind": "update", "paid": "500000"},
            {"week": "2013-W12", "kind": "new", "paid": "0"},
            {"week": "2013-W12", "kind": "firstupdate", "paid": "2500000"},
            {"week": "2013-W12", "kind": "update", "paid": "1000000"},
        ],
        "rereg": {
            "day": "2013-03-18",
            "window": 100,
            "firstupdates_on_day": 5,
            "reregistered": [{"name": "d/alpha", "tx": h("fu3"), "prior": [19150], "last_renewal": 19200},
                             {"name": "d/beta", "tx": h("fu5"), "prior": [19210], "last_renewal": 19210},
                             {"name": "d/zeta", "tx": h("fu6"), "prior": [19320], "last_renewal": 19320}],
            "anomalies": [{"name": "d/eta", "tx": h("fu7"), "prior": [19320], "last_renewal": 19400}],
        },
    }

    # Recount.
    counts = {k: [0, 0] for k in ("blocks", "transactions", "new", "firstupdate", "update")}
    weekly = {}
    for height, time, aux, txs in blocks:
        col = 1 if aux else 0
        counts["blocks"][col] += 1
        week = "%d-W%02d" % datetime.datetime.fromtimestamp(time, datetime.timezone.utc).isocalendar()[:2]
        for tag, op, name, fee in txs:
            counts["transactions"][col] += 1
            if op:
                counts[op][col] += 1
                weekly[(week, op)] = weekly.get((week, op), 0) + fee
    assert [{"label": k, "normal": v[0], "merged": v[1]} for k, v in counts.items()] == expected["mergemine"]
    for row in expected["weekly_fees"]:
        assert weekly.get((row["week"], row["kind"]), 0) == int(row["paid"]), row
    return lines, expected


def peercoin():
    months = [  # (first day, pos, pow); February is empty on purpose
        (datetime.datetime(2012, 12, 1, tzinfo=datetime.timezone.utc), 0, 4),
        (datetime.datetime(2013, 1, 1, tzinfo=datetime.timezone.utc), 7, 3),
        (datetime.datetime(2013, 3, 1, tzinfo=datetime.timezone.utc), 2, 5),
    ]
    lines = []
    height = 0
    parent = h("ppc-genesis")
    for start, pos, pow_ in months:
        seq = []
        for i in range(max(pos, pow_)):
            if i < pow_:
                seq.append("pow")
            if i < pos:
                seq.append("pos")
        for i, proof in enumerate(seq):
            bh = h(f"ppc-{height}")
            lines.append({"type": "block", "chain": "ppc", "height": height, "hash": bh, "parent": parent,
                          "time": int(start.timestamp()) + i * 7200, "proof": proof, "txs": []})
            parent = bh
            height += 1
    expected = [{"month": "2012-12", "pos": 0, "pow": 4}, {"month": "2013-01", "pos": 7, "pow": 3},
                {"month": "2013-02", "pos": 0, "pow": 0}, {"month": "2013-03", "pos": 2, "pow": 5}]
    assert height == 21
    return lines, expected


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
    nmc, nmc_expected = namecoin()
    ppc, ppc_expected = peercoin()
    (out / "nmc_labeled.ndjson").write_text("".join(json.dumps(r) + "\n" for r in nmc))
    (out / "ppc_labeled.ndjson").write_text("".join(json.dumps(r) + "\n" for r in ppc))
    (out / "chain_expected.json").write_text(json.dumps({"nmc": nmc_expected, "ppc": ppc_expected}, indent=2) + "\n")


if __name__ == "__main__":
    main()
