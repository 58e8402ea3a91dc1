"""
Tujuan: Subcommand click dan kontrak exit code
        (0 sukses, 1 gagal atau witness, 2 usage atau resource)
Dependensi: click, src.core, src.utils
Tanggal Pembuatan: 17 Oktober 2026
Penulis: Tim Pengembangan
Contoh: run(["np-check", "--config", "segre:1,1,1", "-p", "3", "--max-degree", "6"])
"""

import json
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

import click

from .. import __version__
from ..core.chains import Chain
from ..core.complex import union_x
from ..core.config import ConfigManager
from ..core.errors import (
    InvalidDescriptorError,
    InvalidMultidegreeError,
    ResourceLimitError,
    SegreSyzygyError,
    UfoValidationError,
)
from ..core.koszul import cross_check
from ..core.point_config import PointConfiguration, degree, parse_descriptor
from ..core.syzygy import CheckStatus, betti_table, check_np, find_witness, graded_betti
from ..core.ufo import (
    fill_simple,
    fill_subc,
    fill_ufo24,
    make_ufo,
    push_boundary,
    step1_push,
    step2_retract,
)
from ..utils.cache_store import BettiCache, resolve_cache_dir
from ..utils.performance import get_performance_summary, performance_monitor
from ..utils.report_format import (
    render_betti,
    render_cross_check,
    render_np,
    render_record,
    render_witnesses,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

LEMMAS = ("simple", "subc", "ufo24", "push", "step1", "step2")


@dataclass
class RunContext:
    """Setting efektif setelah prioritas flag > env > settings > default."""

    jobs: int
    seed: int
    randomize: bool
    cache: Optional[BettiCache]
    fmt: str
    degree_slack: int
    max_koszul_terms: int

    def engine_kwargs(self, with_cache: bool = True) -> Dict[str, Any]:
        kwargs: Dict[str, Any] = {
            "jobs": self.jobs,
            "seed": self.seed,
            "randomize": self.randomize,
        }
        if with_cache and self.cache is not None:
            kwargs["cache"] = self.cache
        return kwargs


def _build_context(
    jobs: Optional[int],
    seed: Optional[int],
    randomize_primes: bool,
    cache_dir: Optional[str],
    fmt: Optional[str],
    settings: Optional[str],
    log_level: Optional[str],
) -> RunContext:
    from ..main import setup_logging

    config = ConfigManager(settings).load_config()
    setup_logging((log_level or config["log_level"]).upper(), config["log_file"])
    directory = resolve_cache_dir(cache_dir, config["cache_dir"])
    return RunContext(
        jobs=config["jobs"] if jobs is None else jobs,
        seed=config["seed"] if seed is None else seed,
        randomize=randomize_primes or config["randomize_primes"],
        cache=BettiCache(directory) if directory else None,
        fmt=fmt or config["output_format"],
        degree_slack=config["degree_slack"],
        max_koszul_terms=config["max_koszul_terms"],
    )


def common_options(func: Callable) -> Callable:
    """Flag yang dimiliki setiap subcommand."""
    options = [
        click.option(
            "--jobs",
            type=click.IntRange(min=0),
            default=None,
            help="Jumlah worker (0 = semua CPU).",
        ),
        click.option("--seed", type=int, default=None, help="Seed generator prima."),
        click.option(
            "--randomize-primes",
            is_flag=True,
            default=False,
            help="Pilih prima secara acak.",
        ),
        click.option(
            "--cache-dir",
            type=click.Path(file_okay=False),
            default=None,
            help="Direktori cache Betti.",
        ),
        click.option(
            "--format",
            "fmt",
            type=click.Choice(["json", "csv"]),
            default=None,
            help="Format output.",
        ),
        click.option(
            "--settings",
            type=click.Path(dir_okay=False),
            default=None,
            help="Path settings.json.",
        ),
        click.option(
            "--log-level",
            default=None,
            type=click.Choice(
                ["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False
            ),
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _parse_config(text: str) -> PointConfiguration:
    return parse_descriptor(text)


def _parse_int_list(text: str) -> List[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise click.BadParameter(f"Daftar bilangan tidak valid: {text!r}") from e
    if not values:
        raise click.BadParameter("Daftar bilangan tidak boleh kosong")
    return values


@click.group()
@click.version_option(__version__, prog_name="segre-syzygy")
def cli():
    """Syzygy embedding Segre lewat kompleks simplisial Delta_b."""


@cli.command()
@click.option("--config", "descriptor", required=True, help="mis. segre:1,1,1")
@click.option(
    "--index",
    "j",
    type=click.IntRange(min=0),
    required=True,
    help="Indeks homologi j (maksimum jika --table).",
)
@click.option(
    "--degree",
    "t",
    type=click.IntRange(min=0),
    required=True,
    help="Derajat t (maksimum jika --table).",
)
@click.option(
    "--table",
    is_flag=True,
    default=False,
    help="Seluruh tabel j <= index, t <= degree.",
)
@click.option(
    "--no-symmetry", is_flag=True, default=False, help="Tanpa reduksi simetri."
)
@common_options
def betti(descriptor, j, t, table, no_symmetry, **common):
    """Rank H~_j(Delta_b) untuk semua b berderajat t."""
    ctx = _build_context(**common)
    cfg = _parse_config(descriptor)
    kwargs = ctx.engine_kwargs()
    kwargs["symmetry"] = not no_symmetry
    with performance_monitor.track("betti") as record:
        if table:
            result = betti_table(cfg, j, t, **kwargs)
        else:
            result = graded_betti(cfg, j, t, **kwargs)
    click.echo(render_betti(result, ctx.fmt, {"seconds": round(record["seconds"], 3)}))
    return EXIT_OK


@cli.command("np-check")
@click.option("--config", "descriptor", required=True)
@click.option("-p", "p", type=click.IntRange(min=1), required=True)
@click.option(
    "--max-degree",
    type=int,
    default=None,
    help="Batas derajat D (default p + slack).",
)
@click.option(
    "--no-cap", is_flag=True, default=False, help="Jangan potong dimensi ke p."
)
@common_options
def np_check(descriptor, p, max_degree, no_cap, **common):
    """Cek Property N_p sampai derajat D."""
    ctx = _build_context(**common)
    cfg = _parse_config(descriptor)
    with performance_monitor.track("np-check") as record:
        report = check_np(
            cfg,
            p,
            max_degree=max_degree,
            use_cap=not no_cap,
            degree_slack=ctx.degree_slack,
            **ctx.engine_kwargs(),
        )
    checked = parse_descriptor(report.config)
    degrees = {tuple(b): degree(b, checked) for b, _, _ in report.witnesses}
    meta = {"seconds": round(record["seconds"], 3)}
    click.echo(render_np(report, ctx.fmt, degrees, meta))
    return EXIT_OK if report.status is CheckStatus.VERIFIED else EXIT_FAILED


@cli.command()
@click.option("--config", "descriptor", required=True)
@click.option("-p", "p", type=click.IntRange(min=1), required=True)
@click.option("--degrees", required=True, help="Daftar derajat, mis. 6,7")
@click.option(
    "--no-extend",
    is_flag=True,
    default=False,
    help="Jangan coba derajat berikutnya bila kosong.",
)
@common_options
def witness(descriptor, p, degrees, no_extend, **common):
    """Cari multidegree yang menggagalkan N_p beserta cycle tersertifikasi."""
    ctx = _build_context(**common)
    cfg = _parse_config(descriptor)
    with performance_monitor.track("witness") as record:
        found = find_witness(
            cfg,
            p,
            _parse_int_list(degrees),
            extend=not no_extend,
            **ctx.engine_kwargs(),
        )
    meta = {"seconds": round(record["seconds"], 3)}
    click.echo(render_witnesses(cfg.descriptor, p, found, ctx.fmt, meta))
    return EXIT_FAILED if found else EXIT_OK


@cli.command("koszul-check")
@click.option("--config", "descriptor", required=True)
@click.option("-p", "p", type=click.IntRange(min=1), required=True)
@click.option("-q", "q", type=click.IntRange(min=0), required=True)
@click.option("--unblocked", is_flag=True, default=False, help="Rakit matriks global.")
@common_options
def koszul_check(descriptor, p, q, unblocked, **common):
    """Bandingkan dim Tor dari kompleks Koszul dengan jumlah cps_rank."""
    ctx = _build_context(**common)
    cfg = _parse_config(descriptor)
    with performance_monitor.track("koszul-check") as record:
        result = cross_check(
            cfg,
            p,
            q,
            max_terms=ctx.max_koszul_terms,
            blocked=not unblocked,
            **ctx.engine_kwargs(with_cache=False),
        )
    meta = {"seconds": round(record["seconds"], 3)}
    click.echo(render_cross_check(cfg.descriptor, p, q, result, ctx.fmt, meta))
    return EXIT_OK if result.match else EXIT_FAILED


def _vertex(cfg: PointConfiguration, value) -> int:
    """Vertex instance: indeks titik atau vektor koordinat."""
    if isinstance(value, int):
        if not 0 <= value < cfg.m:
            raise UfoValidationError(f"Indeks vertex di luar konfigurasi: {value}")
        return value
    index = cfg.index_of(value)
    if index < 0:
        raise UfoValidationError(f"{value} bukan titik {cfg.descriptor}")
    return index


def _chain(cfg: PointConfiguration, data: Dict) -> Chain:
    records = [
        ([_vertex(cfg, v) for v in vertices], coeff)
        for vertices, coeff in data["terms"]
    ]
    return Chain.from_records(int(data["dim"]), records)


def _vertices(cfg: PointConfiguration, values: Sequence) -> List[int]:
    return [_vertex(cfg, v) for v in values]


def replay_instance(lemma: str, instance: Dict) -> Dict[str, Any]:
    """
    Jalankan satu lemma pada instance JSON dan kembalikan sertifikatnya.

    Raises:
        UfoValidationError: Instance tidak lengkap.
    """
    cfg = parse_descriptor(instance["config"])
    try:
        if lemma in ("simple", "subc", "ufo24"):
            u = make_ufo(
                _vertices(cfg, instance["axis"]),
                _chain(cfg, instance["base"]),
                int(instance.get("coord", 1)),
                instance["beta"],
                cfg,
            )
            if lemma == "simple":
                cert = fill_simple(
                    u, int(instance["r"]), int(instance["l"]), int(instance["p"])
                )
            elif lemma == "subc":
                cert = fill_subc(u, _vertices(cfg, instance["sigma"]))
            else:
                cert = fill_ufo24(u)
            return cert.to_dict()
        if lemma == "push":
            cert = push_boundary(
                _chain(cfg, instance["eta"]), instance["beta"], int(instance["p"]), cfg
            )
            return cert.to_dict()
        gamma = _chain(cfg, instance["gamma"])
        p = int(instance["p"])
        if lemma == "step1":
            result = step1_push(gamma, instance["b"], p, cfg)
            return {
                "lemma": "step1",
                "target": union_x(cfg, instance["b"]).label,
                "cycle": result.cycle.to_records(),
                "witness": result.witness.to_records(),
                "boundary_equal": True,
                "support_contained": True,
            }
        known = instance.get("filling")
        filling = step2_retract(
            gamma,
            instance["b"],
            p,
            cfg,
            search_dim=instance.get("search_dim"),
            filling=_chain(cfg, known) if known else None,
        )
        return {
            "lemma": "step2",
            "filling": filling.to_records(),
            "boundary_equal": True,
            "support_contained": True,
        }
    except KeyError as e:
        raise UfoValidationError(f"Instance tidak memuat kunci {e}") from e


@cli.command("ufo-demo")
@click.option("--lemma", type=click.Choice(LEMMAS), required=True)
@click.option(
    "--instance",
    "instance_path",
    type=click.Path(exists=True, dir_okay=False),
    required=True,
    help="File JSON instance.",
)
@common_options
def ufo_demo(lemma, instance_path, **common):
    """Putar ulang satu lemma filling pada instance tersimpan."""
    ctx = _build_context(**common)
    with open(instance_path, "r", encoding="utf-8") as f:
        try:
            instance = json.load(f)
        except json.JSONDecodeError as e:
            raise click.BadParameter(f"Instance bukan JSON valid: {e}") from e
    with performance_monitor.track("ufo-demo"):
        payload = replay_instance(lemma, instance)
    click.echo(render_record(payload, ctx.fmt))
    return EXIT_OK


@cli.command()
@click.option("--clear", is_flag=True, default=False, help="Kosongkan cache.")
@common_options
def cache(clear, **common):
    """Statistik cache Betti."""
    ctx = _build_context(**common)
    if ctx.cache is None:
        click.echo(render_record({"enabled": False}, ctx.fmt))
        return EXIT_OK
    if clear:
        ctx.cache.clear()
    click.echo(render_record({"enabled": True, **ctx.cache.stats()}, ctx.fmt))
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Jalankan CLI dan kembalikan exit code.

    Args:
        argv: Argumen tanpa nama program; None = sys.argv.

    Returns:
        0 sukses/terverifikasi, 1 N_p gagal atau witness ditemukan, 2 usage/resource.
    """
    try:
        result = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="segre-syzygy",
            standalone_mode=False,
        )
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("Dibatalkan.", err=True)
        return EXIT_FAILED
    except (ResourceLimitError, InvalidDescriptorError, InvalidMultidegreeError) as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_USAGE
    except SegreSyzygyError as e:
        logger.error(f"{type(e).__name__}: {e}")
        click.echo(f"Error: {e}", err=True)
        return EXIT_FAILED
    logger.debug(f"Ringkasan performa: {get_performance_summary()}")
    return result if isinstance(result, int) else EXIT_OK
