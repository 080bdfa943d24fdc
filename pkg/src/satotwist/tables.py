"""Rendering of candidate tables as JSON, CSV and aligned text."""
from __future__ import annotations

import json

from .groups import CandidateTable, TripleRecord


def _gid(g: tuple[int, int]) -> str:
    return f"<{g[0]},{g[1]}>"


def table_json(table: CandidateTable) -> str:
    body = {
        "d": table.d,
        "group_order": table.group_order,
        "conjugacy_classes": table.class_count,
        "records": [r.as_dict() for r in table.records],
        "realizable_count": table.realizable_count,
    }
    return json.dumps(body, indent=2) + "\n"


def table_csv(table: CandidateTable) -> str:
    lines = ["st_group,gal_LQ,gal_KQ,gal_LM,galois_type,z,realizable"]
    for r in table.records:
        lq, kq, lm = (_gid(g) for g in r.group_ids)
        z = " ".join(map(str, r.z.flat()))
        lines.append(f'{r.st_group},"{lq}","{kq}","{lm}","{r.galois_type}",{z},{str(r.realizable_over_Q).lower()}')
    return "\n".join(lines) + "\n"


def _text_row(r: TripleRecord) -> list[str]:
    name = r.st_group if r.realizable_over_Q else "*" + r.st_group
    z1 = ", ".join(map(str, r.z.z1))
    z2 = ", ".join(map(str, r.z.z2))
    return [name, *(_gid(g) for g in r.group_ids), r.galois_type, f"[{z1}; {z2}]"]


def table_text(table: CandidateTable) -> str:
    head = ["G", "H", "H/N", "H0", "Galois type", "z(H,N,H0)"]
    rows = [head] + [_text_row(r) for r in table.records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(head) - 1)]
    out = []
    for row in rows:
        cells = [c.ljust(w) for c, w in zip(row, widths)] + [row[-1]]
        out.append("  ".join(cells).rstrip())
    out.append(f"# d={table.d}  |G|={table.group_order}  classes={table.class_count}  "
               f"records={len(table.records)}  realizable={table.realizable_count}")
    return "\n".join(out) + "\n"


FORMATTERS = {"json": table_json, "csv": table_csv, "text": table_text}
