"""
Tujuan: Durasi dan RSS proses untuk perhitungan Betti, N_p, dan Koszul
Dependensi: time, psutil, logging
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
"""

import logging
import time
from contextlib import contextmanager
from functools import wraps
from typing import Any, Callable, Dict, Iterator

import psutil

logger = logging.getLogger(__name__)

_MB = 1024 * 1024


class PerformanceMonitor:
    """Menyimpan metrik terakhir per nama operasi."""

    def __init__(self):
        self.metrics: Dict[str, Dict[str, Any]] = {}
        self.start_time = time.time()
        self.process = psutil.Process()

    def memory_mb(self) -> float:
        try:
            return self.process.memory_info().rss / _MB
        except psutil.Error as e:
            logger.error(f"RSS proses tidak terbaca: {e}")
            return 0.0

    def get_system_info(self) -> Dict[str, Any]:
        # cpu_percent sengaja tidak dipanggil: sampling-nya memblokir
        return {
            "cpu_count": psutil.cpu_count(logical=True),
            "process_memory": self.memory_mb(),
            "uptime": time.time() - self.start_time,
        }

    def log_performance(self, operation: str, duration: float, **extra) -> None:
        entry = {
            "operation": operation,
            "duration": duration,
            "timestamp": time.time(),
            "process_memory": self.memory_mb(),
        }
        entry.update(extra)
        self.metrics[operation] = entry
        logger.info(
            f"{operation}: {duration:.2f}s, RSS {entry['process_memory']:.1f}MB"
        )

    @contextmanager
    def track(self, operation: str, **extra) -> Iterator[Dict[str, Any]]:
        """
        Ukur satu blok; dict yang di-yield menerima `seconds` saat keluar.

        Exception dari blok diteruskan setelah dicatat dengan success=False.
        """
        record: Dict[str, Any] = {}
        began = time.perf_counter()
        ok = False
        try:
            yield record
            ok = True
        finally:
            record["seconds"] = time.perf_counter() - began
            self.log_performance(operation, record["seconds"], success=ok, **extra)


def performance_decorator(monitor: PerformanceMonitor):
    """Catat durasi setiap panggilan fungsi sebagai `modul.nama`."""

    def decorator(func: Callable) -> Callable:
        name = f"{func.__module__}.{func.__name__}"

        @wraps(func)
        def wrapper(*args, **kwargs):
            began = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                monitor.log_performance(
                    operation=name,
                    duration=time.perf_counter() - began,
                    success=False,
                    error=str(e),
                )
                raise
            monitor.log_performance(
                operation=name, duration=time.perf_counter() - began, success=True
            )
            return result

        return wrapper

    return decorator


performance_monitor = PerformanceMonitor()


def get_performance_summary() -> Dict[str, Any]:
    """Durasi per operasi (detik, 3 desimal) plus info proses."""
    system = performance_monitor.get_system_info()
    durations = {
        name: round(entry["duration"], 3)
        for name, entry in performance_monitor.metrics.items()
    }
    return {
        "system": system,
        "operations": durations,
        "uptime": system.get("uptime", 0),
    }
