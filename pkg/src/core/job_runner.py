"""
Tujuan: Menjalankan job per-multidegree secara paralel dengan hasil terurut
Dependensi: concurrent.futures, psutil
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: JobRunner(max_workers=4).run(_rank_job, payloads)
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence

import psutil

logger = logging.getLogger(__name__)


@dataclass
class JobBatchResult:
    """Data class untuk hasil satu batch job."""

    results: List[Any]
    total_jobs: int
    total_time: float
    workers: int


def resolve_workers(jobs: Optional[int]) -> int:
    """0 atau None berarti semua CPU yang tersedia."""
    if jobs is None or jobs <= 0:
        return max(1, psutil.cpu_count(logical=True) or 1)
    return jobs


class JobRunner:
    """
    Runner untuk job independen yang picklable.

    Hasil dikumpulkan dengan as_completed lalu dikembalikan dalam urutan
    submit sehingga agregasi deterministik. Dengan satu worker job dijalankan
    inline tanpa pool proses.
    """

    def __init__(self, max_workers: Optional[int] = 1):
        """
        Inisialisasi JobRunner.

        Args:
            max_workers: Jumlah worker proses; 0/None = semua CPU.
        """
        self.max_workers = resolve_workers(max_workers)

    def run(
        self,
        func: Callable[[Any], Any],
        payloads: Sequence[Any],
        progress_callback: Optional[Callable[[int, int, int], None]] = None,
    ) -> JobBatchResult:
        """
        Menjalankan func untuk setiap payload.

        Args:
            func: Fungsi top-level (harus picklable untuk mode proses).
            payloads: Argumen per job.
            progress_callback: Dipanggil dengan (index, selesai, total).

        Returns:
            JobBatchResult dengan hasil dalam urutan payload.
        """
        start_time = time.time()
        total = len(payloads)
        results: List[Any] = [None] * total
        workers = min(self.max_workers, total) if total else 1

        if workers <= 1:
            for index, payload in enumerate(payloads):
                results[index] = func(payload)
                if progress_callback:
                    progress_callback(index, index + 1, total)
        else:
            logger.info(f"Menjalankan {total} job dengan {workers} worker")
            with ProcessPoolExecutor(max_workers=workers) as executor:
                future_to_index = {
                    executor.submit(func, payload): index
                    for index, payload in enumerate(payloads)
                }
                for done, future in enumerate(as_completed(future_to_index), start=1):
                    index = future_to_index[future]
                    try:
                        results[index] = future.result()
                    except Exception as e:
                        logger.error(f"Job {index} gagal: {e}")
                        raise
                    if progress_callback:
                        progress_callback(index, done, total)

        total_time = time.time() - start_time
        logger.debug(f"{total} job selesai dalam {total_time:.2f} detik")
        return JobBatchResult(
            results=results, total_jobs=total, total_time=total_time, workers=workers
        )
