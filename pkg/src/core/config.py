"""
Tujuan: Membaca dan menulis config/settings.json kalkulator syzygy Segre
Dependensi: json, os
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: settings = ConfigManager().load_config()
"""

import json
import logging
import os
from typing import Any, Callable, Dict, Optional, Tuple

from .homology import DEFAULT_SEED
from .koszul import DEFAULT_MAX_TERMS

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "csv")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# (tipe, normalisasi, predikat) per kunci settings
_Rule = Tuple[type, Callable[[Any], Any], Callable[[Any], bool]]
_SETTING_RULES: Dict[str, _Rule] = {
    "seed": (int, lambda v: v, lambda v: True),
    "randomize_primes": (bool, lambda v: v, lambda v: True),
    "jobs": (int, lambda v: v, lambda v: v >= 0),
    "cache_dir": (str, lambda v: v, lambda v: True),
    "output_format": (str, str.lower, lambda v: v in OUTPUT_FORMATS),
    "log_level": (str, str.upper, lambda v: v in LOG_LEVELS),
    "log_file": (str, lambda v: v, lambda v: True),
    "max_koszul_terms": (int, lambda v: v, lambda v: v >= 1),
    "degree_slack": (int, lambda v: v, lambda v: v >= 1),
}


def _accepts(expected: type, value: Any) -> bool:
    # True/False bukan jumlah worker maupun seed
    if isinstance(value, bool):
        return expected is bool
    return isinstance(value, expected)


class ConfigManager:
    """
    Settings proyek: seed prima, jumlah worker, lokasi cache, format output,
    level log, batas kompleks Koszul, dan slack derajat N_p.

    Settings yang rusak tidak pernah menghentikan perhitungan; nilai yang
    ditolak diganti default dan dicatat sebagai warning.
    """

    def __init__(self, config_path: Optional[str] = None):
        if config_path is None:
            project_root = os.path.dirname(
                os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
            )
            config_path = os.path.join(project_root, "config", "settings.json")
        self.config_path = config_path

        self.default_config: Dict[str, Any] = {
            "seed": DEFAULT_SEED,
            "randomize_primes": False,
            "jobs": 0,
            "cache_dir": "",
            "output_format": "json",
            "log_level": "INFO",
            "log_file": "",
            "max_koszul_terms": DEFAULT_MAX_TERMS,
            "degree_slack": 3,
        }

    def _read_raw(self) -> Optional[Dict[str, Any]]:
        """Isi mentah file settings, atau None bila tidak bisa dipakai."""
        if not os.path.exists(self.config_path):
            logger.debug(f"Settings belum ada di {self.config_path}, pakai default")
            return None
        try:
            with open(self.config_path, "r", encoding="utf-8") as handle:
                raw = json.load(handle)
        except json.JSONDecodeError as e:
            logger.error(f"Settings bukan JSON valid ({self.config_path}): {e}")
            return None
        except OSError as e:
            logger.error(f"Settings tidak bisa dibaca ({self.config_path}): {e}")
            return None
        if not isinstance(raw, dict):
            logger.warning(
                f"Settings harus objek JSON, ditemukan {type(raw).__name__}"
            )
            return None
        return raw

    def load_config(self) -> Dict[str, Any]:
        """
        Settings tervalidasi, dilengkapi default untuk kunci yang hilang.

        Returns:
            Dictionary dengan semua kunci di default_config.
        """
        raw = self._read_raw()
        if raw is None:
            return dict(self.default_config)
        settings = self._validate_config(raw)
        logger.debug(f"Settings dimuat dari {self.config_path}")
        return settings

    def save_config(self, config: Dict[str, Any]) -> bool:
        """Validasi lalu tulis settings; False bila path tidak bisa ditulis."""
        settings = self._validate_config(config)
        parent = os.path.dirname(self.config_path)
        try:
            if parent:
                os.makedirs(parent, exist_ok=True)
            with open(self.config_path, "w", encoding="utf-8") as handle:
                json.dump(settings, handle, indent=2, ensure_ascii=False)
        except OSError as e:
            logger.error(f"Gagal menulis settings ke {self.config_path}: {e}")
            return False
        logger.info(f"Settings ditulis ke {self.config_path}")
        return True

    def update_config(self, key: str, value: Any) -> bool:
        settings = self.load_config()
        settings[key] = value
        if not self.save_config(settings):
            return False
        logger.info(f"Settings '{key}' diperbarui")
        return True

    def get_config(self, key: str, default: Any = None) -> Any:
        return self.load_config().get(key, default)

    def _validate_config(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """
        Terapkan aturan per kunci di atas default.

        Kunci asing dibuang; nilai bertipe salah atau di luar rentang
        diganti default.
        """
        settings = dict(self.default_config)
        for key, value in config.items():
            rule = _SETTING_RULES.get(key)
            if rule is None:
                logger.warning(f"Kunci settings tidak dikenal diabaikan: {key}")
                continue
            expected, normalize, allowed = rule
            if _accepts(expected, value):
                value = normalize(value)
                if allowed(value):
                    settings[key] = value
                    continue
            logger.warning(f"Settings {key}={value!r} ditolak, pakai default")
        return settings

    def reset_to_default(self) -> bool:
        return self.save_config(dict(self.default_config))
