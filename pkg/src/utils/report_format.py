"""
Tujuan: Render hasil perhitungan ke JSON atau CSV untuk stdout
Dependensi: csv, io, json
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: print(render_betti(table, "csv"))
"""

import csv
import io
import json
from typing import Any, Dict, Iterable, List, Optional, Sequence

CSV_HEADER = ("j", "t", "b", "rank")


def to_json(payload: Dict[str, Any]) -> str:
    """JSON dengan kunci terurut."""
    return json.dumps(payload, indent=2, sort_keys=True)


def to_csv(rows: Iterable[Sequence[Any]], header: Sequence[str] = CSV_HEADER) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue().rstrip("\n")


def _join_b(b: Sequence[int]) -> str:
    return ";".join(str(x) for x in b)


def entry_rows(entries: Iterable[Any]) -> List[Sequence[Any]]:
    """Baris CSV j,t,b,rank dari objek dengan atribut j, t, b, rank."""
    return [(e.j, e.t, _join_b(e.b), e.rank) for e in entries]


def render_betti(table, fmt: str = "json", meta: Optional[Dict] = None) -> str:
    if fmt == "csv":
        return to_csv(entry_rows(table.entries))
    payload = table.to_dict()
    payload["meta"] = {**table.meta, **(meta or {})}
    return to_json(payload)


def render_np(
    report, fmt: str = "json", degrees: Optional[Dict] = None, meta=None
) -> str:
    """
    Laporan N_p; CSV berisi baris witness (j,t,b,rank).

    Args:
        degrees: Peta b -> derajat untuk kolom t CSV.
    """
    if fmt == "csv":
        degrees = degrees or {}
        return to_csv(
            (j, degrees.get(tuple(b), ""), _join_b(b), rank)
            for b, j, rank in report.witnesses
        )
    payload = report.to_dict()
    payload["meta"] = meta or {}
    return to_json(payload)


def render_witnesses(
    config: str, p: int, witnesses, fmt: str = "json", meta=None
) -> str:
    if fmt == "csv":
        return to_csv(
            (w.j, w.t, _join_b(w.b), w.rank) for w in witnesses
        )
    payload = {
        "config": config,
        "p": p,
        "witnesses": [
            {
                "b": list(w.b),
                "j": w.j,
                "t": w.t,
                "rank": w.rank,
                "cycle": w.cycle.to_records(),
            }
            for w in witnesses
        ],
        "meta": meta or {},
    }
    return to_json(payload)


def render_cross_check(
    config: str, p: int, q: int, result, fmt: str = "json", meta=None
) -> str:
    if fmt == "csv":
        return to_csv(
            [(p, q, result.koszul, result.cps, result.summary)],
            header=("p", "q", "koszul", "cps", "summary"),
        )
    payload = {
        "config": config,
        "p": p,
        "q": q,
        "koszul": result.koszul,
        "cps": result.cps,
        "match": result.match,
        "summary": result.summary,
        "meta": meta or {},
    }
    return to_json(payload)


def render_record(payload: Dict[str, Any], fmt: str = "json") -> str:
    """Objek datar (sertifikat, statistik cache); CSV berupa pasangan key,value."""
    if fmt == "csv":
        return to_csv(
            ((key, json.dumps(value)) for key, value in sorted(payload.items())),
            header=("key", "value"),
        )
    return to_json(payload)
