"""
Tujuan: Unit test JobRunner (inline dan pool proses)
Dependensi: pytest, unittest.mock, src.core.job_runner
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
"""

from unittest.mock import patch

import pytest

from src.core.job_runner import JobRunner, resolve_workers


class TestResolveWorkers:
    def test_explicit(self):
        assert resolve_workers(3) == 3

    @patch("src.core.job_runner.psutil.cpu_count", return_value=6)
    def test_zero_means_all_cpus(self, mock_count):
        assert resolve_workers(0) == 6
        assert resolve_workers(None) == 6

    @patch("src.core.job_runner.psutil.cpu_count", return_value=None)
    def test_unknown_cpu_count(self, mock_count):
        assert resolve_workers(0) == 1


class TestJobRunner:
    """Hasil selalu dalam urutan payload."""

    def test_inline(self):
        calls = []
        result = JobRunner(1).run(
            abs, [-3, 1, -2], progress_callback=lambda *args: calls.append(args)
        )
        assert result.results == [3, 1, 2]
        assert result.workers == 1
        assert calls == [(0, 1, 3), (1, 2, 3), (2, 3, 3)]

    def test_empty(self):
        result = JobRunner(4).run(abs, [])
        assert result.results == []
        assert result.total_jobs == 0

    def test_process_pool_keeps_order(self):
        payloads = list(range(-20, 0))
        result = JobRunner(2).run(abs, payloads)
        assert result.results == [abs(x) for x in payloads]
        assert result.workers == 2

    def test_worker_error_propagates(self):
        with pytest.raises(TypeError):
            JobRunner(2).run(abs, [1, "x"])
