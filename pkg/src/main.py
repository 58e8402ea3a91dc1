"""
Tujuan: Entry point utama kalkulator syzygy Segre
Dependensi: src.cli, logging, sys
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: python -m src.main betti --config segre:1,1,1 --index 0 --degree 2
"""

import logging
import sys
from typing import Optional, Sequence

from src.cli.commands import run

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: str = "INFO", log_file: str = "") -> logging.Logger:
    """
    Setup logging ke stderr (stdout hanya untuk output JSON/CSV).

    Args:
        level: Nama level logging.
        log_file: File log tambahan; kosong = tanpa file.
    """
    root = logging.getLogger()
    if not root.handlers:
        handlers = [logging.StreamHandler(sys.stderr)]
        if log_file:
            handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
        logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers)
    root.setLevel(level)
    return logging.getLogger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main function."""
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
