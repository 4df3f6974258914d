""" Command-line entry point: gen, window, train, score, eval, sweep, replay.

    Every command writes its artifact plus ``<output>.manifest.json`` holding
    the command, its arguments, the fully resolved settings, the seed and the
    tool version; ``replay MANIFEST`` re-runs it with exactly those inputs.

    Returns:
        Exit status 0 on success, 2 for usage/config/data errors, 1 for
        internal failures.

    Example:
        $ python main.py gen gen.json data/site.csv
        $ python main.py train data/site.csv runs/model.json --detector ensemble
        $ python main.py eval runs/model.json data/holdout.csv runs/report.json
        $ python main.py sweep data/site.csv runs/sweep.json --n-grid 5,10,15,20,25 --p-grid 7
"""

import argparse
import logging
from pathlib import Path
from typing import Callable

from src import __version__
from src.config.paths import get_run_paths
from src.config.settings import Settings, get_settings, setup_logging
from src.data.csv_io import write_readings
from src.features.windowing import build_dataset, windows_to_csv
from src.models.detectors import DetectorKind
from src.models.generation import GenConfig
from src.models.report import RunManifest
from src.models.window import WindowConfig
from src.output.report_generator import (
    load_model_document,
    render_sweep_table,
    save_document,
    save_table,
)
from src.pipeline.runner import (
    evaluate_model,
    load_segments,
    run_sweep,
    score_windows,
    train_detector,
)
from src.synth.generator import generate
from src.utils.progress import console

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2


def parse_grid(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("grid must not be empty")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("grid values must be positive")
    return values


def _window(args: argparse.Namespace, settings: Settings) -> WindowConfig:
    return WindowConfig(
        n_history=settings.windowing.n_history if args.n_history is None else args.n_history,
        p_future=settings.windowing.p_future if args.p_future is None else args.p_future,
    )


def _write_manifest(
    command: str,
    args: argparse.Namespace,
    settings: Settings,
    inputs: list[Path],
    output: Path,
    extra_outputs: list[Path] | None = None,
    seed: int | None = None,
) -> None:
    arguments = {
        key: str(value) if isinstance(value, Path) else value
        for key, value in vars(args).items()
        if key not in {"handler", "command", "config", "log_level"}
    }
    paths = get_run_paths(output)
    manifest = RunManifest(
        command=command,
        arguments=arguments,
        settings=settings.model_dump(mode="json"),
        seed=seed,
        inputs=[str(p) for p in inputs],
        outputs=[str(p) for p in [output, *(extra_outputs or [])]],
        tool_version=__version__,
    )
    save_document(manifest, paths.manifest)


def cmd_gen(args: argparse.Namespace, settings: Settings) -> int:
    config_path, output = Path(args.config_file), Path(args.output)
    cfg = GenConfig.model_validate_json(config_path.read_text(encoding="utf-8"))
    write_readings(output, generate(cfg))
    _write_manifest("gen", args, settings, [config_path], output, seed=cfg.seed)
    return EXIT_OK


def cmd_window(args: argparse.Namespace, settings: Settings) -> int:
    data, output = Path(args.data), Path(args.output)
    window = _window(args, settings)
    samples = build_dataset(load_segments(data), window)
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(windows_to_csv(samples, window), encoding="utf-8")
    logger.info(f"{len(samples)} windows saved to: {output}")
    _write_manifest("window", args, settings, [data], output)
    return EXIT_OK


def cmd_train(args: argparse.Namespace, settings: Settings) -> int:
    data, output = Path(args.data), Path(args.output)
    seed = settings.seed if args.seed is None else args.seed
    document = train_detector(
        data, _window(args, settings), DetectorKind(args.detector), seed, settings
    )
    save_document(document, output)
    _write_manifest("train", args, settings, [data], output, seed=seed)
    return EXIT_OK


def cmd_score(args: argparse.Namespace, settings: Settings) -> int:
    model_path, data, output = Path(args.model), Path(args.data), Path(args.output)
    document = score_windows(load_model_document(model_path), data, settings)
    save_document(document, output)
    _write_manifest("score", args, settings, [model_path, data], output)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace, settings: Settings) -> int:
    model_path, data, output = Path(args.model), Path(args.data), Path(args.output)
    document = evaluate_model(load_model_document(model_path), data, settings)
    save_document(document, output)
    _write_manifest("eval", args, settings, [model_path, data], output)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    data, output = Path(args.data), Path(args.output)
    seed = settings.seed if args.seed is None else args.seed
    document = run_sweep(data, args.n_grid, args.p_grid, seed, settings)
    save_document(document, output)

    table = render_sweep_table(document.rows)
    table_path = get_run_paths(output).table
    save_table(table, table_path)
    console.print(table, markup=False, highlight=False)
    _write_manifest("sweep", args, settings, [data], output, [table_path], seed=seed)
    return EXIT_OK


def cmd_replay(args: argparse.Namespace, settings: Settings) -> int:
    manifest = RunManifest.model_validate_json(Path(args.manifest).read_text(encoding="utf-8"))
    if manifest.command not in COMMANDS or manifest.command == "replay":
        raise ValueError(f"cannot replay command {manifest.command!r}")
    logger.info(f"Replaying {manifest.command} from {args.manifest}")
    recorded = Settings.model_validate(manifest.settings)
    return COMMANDS[manifest.command](argparse.Namespace(**manifest.arguments), recorded)


COMMANDS: dict[str, Callable[[argparse.Namespace, Settings], int]] = {
    "gen": cmd_gen,
    "window": cmd_window,
    "train": cmd_train,
    "score": cmd_score,
    "eval": cmd_eval,
    "sweep": cmd_sweep,
    "replay": cmd_replay,
}


def _add_window_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n-history", type=int, default=None, help="history steps N")
    parser.add_argument("--p-future", type=int, default=None, help="future steps P")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sewer-anomaly",
        description="Early anomaly warning for sewer flowmeter time series",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", type=Path, default=None, help="settings YAML")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a synthetic labeled series")
    gen.add_argument("config_file", help="generator config (JSON)")
    gen.add_argument("output", help="output CSV")

    window = sub.add_parser("window", help="write windowed samples as CSV")
    window.add_argument("data")
    window.add_argument("output")
    _add_window_flags(window)

    train = sub.add_parser("train", help="fit a detector on normal windows")
    train.add_argument("data")
    train.add_argument("output", help="model JSON")
    _add_window_flags(train)
    train.add_argument(
        "--detector", choices=[k.value for k in DetectorKind], default=DetectorKind.ENSEMBLE.value
    )
    train.add_argument("--seed", type=int, default=None)

    score = sub.add_parser("score", help="score every window of a data file")
    score.add_argument("model")
    score.add_argument("data")
    score.add_argument("output")

    evaluate = sub.add_parser("eval", help="evaluate a model on labeled data")
    evaluate.add_argument("model")
    evaluate.add_argument("data")
    evaluate.add_argument("output", help="report JSON")

    sweep = sub.add_parser("sweep", help="sweep N and P grids")
    sweep.add_argument("data")
    sweep.add_argument("output", help="sweep JSON (table written next to it)")
    sweep.add_argument("--n-grid", type=parse_grid, required=True)
    sweep.add_argument("--p-grid", type=parse_grid, required=True)
    sweep.add_argument("--seed", type=int, default=None)

    replay = sub.add_parser("replay", help="re-run the command recorded in a manifest")
    replay.add_argument("manifest")

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    try:
        settings = get_settings(args.config)
    except (ValueError, OSError) as e:
        console.print(f"[red]Invalid configuration:[/red] {e}")
        return EXIT_USAGE
    setup_logging(settings, args.log_level)

    try:
        return COMMANDS[args.command](args, settings)
    except (ValueError, OSError) as e:
        # pydantic.ValidationError and json.JSONDecodeError are ValueErrors
        logger.error(f"{args.command} failed: {e}")
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"{args.command} failed with an internal error: {e}")
        return EXIT_INTERNAL
