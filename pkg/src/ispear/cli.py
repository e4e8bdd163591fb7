"""i-spear: synthesize a corpus, extract features, analyze them, evaluate classifiers.

Exit codes: 0 success, 1 runtime or data failure, 2 usage or configuration error.
Data goes to files; diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from ispear.corpus.manifest import load_manifest
from ispear.corpus.synth import SynthConfig, synth_corpus
from ispear.dsp.endpoints import EndpointConfig
from ispear.dsp.features import RESPONSES, extract_features, read_features_csv, write_features_csv
from ispear import reports
from ispear.errors import BadConfigError, IspearError
from ispear.ml.cv import SigmoidConfig, SvmConfig, evaluate_cv
from ispear.ml.data import labeled_set_from_table
from ispear.stats.analysis import analyze_response
from ispear.stats.lmm import group_summary

log = logging.getLogger("ispear")

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


def _positive_int(flag):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} expects an integer, got {text!r}")
        if value <= 0:
            raise argparse.ArgumentTypeError(f"{flag} must be positive, got {value}")
        return value
    return parse


def _folds(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--folds expects an integer, got {text!r}")
    if value < 2:
        raise argparse.ArgumentTypeError(f"--folds must be >= 2, got {value}")
    return value


def cmd_synth(args) -> int:
    try:
        cfg = SynthConfig.from_json(args.config) if args.config else SynthConfig()
        overrides = {}
        if args.subjects is not None:
            overrides["n_subjects"] = args.subjects
        if args.words is not None:
            overrides["n_words"] = args.words
        if args.noise_sd is not None:
            overrides["noise_sd"] = args.noise_sd
        if overrides:
            cfg = SynthConfig.from_dict({**_config_dict(cfg), **overrides})
    except BadConfigError as exc:
        log.error("bad synth config: %s", exc)
        return EXIT_USAGE
    except OSError as exc:
        log.error("cannot read config: %s", exc)
        return EXIT_FAILURE
    try:
        manifest = synth_corpus(cfg, args.seed, args.out)
    except OSError as exc:
        log.error("cannot write corpus: %s", exc)
        return EXIT_FAILURE
    log.info("wrote %d utterances to %s", len(manifest), args.out)
    return EXIT_OK


def _config_dict(cfg):
    return json.loads(cfg.to_json())


def cmd_extract(args) -> int:
    try:
        ep_cfg = EndpointConfig(args.frame_len, args.hop, args.rel_threshold, args.min_onset_frames,
                                args.hangover_frames)
    except ValueError as exc:
        log.error("bad endpoint config: %s", exc)
        return EXIT_USAGE
    try:
        manifest = load_manifest(args.manifest, strict_shape=args.strict_shape)
        report = extract_features(manifest, ep_cfg)
        write_features_csv(report.rows, args.out)
    except (IspearError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_FAILURE
    for rec, msg in report.failures:
        log.warning("skipped %s (%s)", rec.path, msg)
    log.info("extracted %d rows (%d failures) to %s", len(report.rows), len(report.failures), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    out = Path(args.out_dir)
    try:
        table = read_features_csv(args.features)
        results = [
            analyze_response(table, r, random_group=args.random_group, reference=args.reference,
                             boundary_correction=args.boundary_correction)
            for r in RESPONSES
        ]
        summaries = group_summary(table, args.summary_by, "duration_s")
        out.mkdir(parents=True, exist_ok=True)
        text = reports.analysis_text(results, args.random_group, summaries, "duration_s", args.alpha)
        (out / "analysis.txt").write_text(text, encoding="utf-8")
        reports.write_lrt_csv(results, out / "lrt_fixed.csv", "fixed")
        reports.write_lrt_csv(results, out / "lrt_random.csv", "random")
        reports.write_fixed_effects_csv(results, out / "fixed_effects.csv")
        reports.write_group_summary_csv(summaries, out / "group_summary.csv")
    except (IspearError, OSError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_FAILURE
    log.info("analysis written to %s", out)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    out = Path(args.out_dir)
    classifiers = []
    try:
        if args.model in ("svm", "both"):
            classifiers.append(SvmConfig(args.degree, args.coef0, args.gamma, args.C, args.tol,
                                         class_weight=args.class_weight))
        if args.model in ("sigmoid", "both"):
            classifiers.append(SigmoidConfig(args.learning_rate, args.epochs, class_weight=args.class_weight))
    except ValueError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    try:
        table = read_features_csv(args.features)
        data = labeled_set_from_table(table, tuple(args.columns.split(",")))
        results = [evaluate_cv(data, clf, args.folds, args.seed) for clf in classifiers]
        out.mkdir(parents=True, exist_ok=True)
        (out / "evaluation.txt").write_text(reports.evaluation_text(results), encoding="utf-8")
        for rep in results:
            reports.write_eval_csv(rep, out / f"eval_{rep.classifier}.csv")
    except (IspearError, OSError, ValueError, KeyError) as exc:
        log.error("%s", exc)
        return EXIT_FAILURE
    for rep in results:
        log.info("%s: pooled accuracy %.4f", rep.classifier, rep.accuracy)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(prog="i-spear", description=__doc__, formatter_class=fmt)
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress messages")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a synthetic corpus", formatter_class=fmt)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--seed", type=int, default=42, help="root random seed")
    p.add_argument("--config", help="JSON synth config (see configs/synth_default.json)")
    p.add_argument("--subjects", type=_positive_int("--subjects"), help="override subject count (default 38)")
    p.add_argument("--words", type=_positive_int("--words"), help="override word count (default 30)")
    p.add_argument("--noise-sd", type=float, help="override residual duration SD in samples (default 200)")
    p.set_defaults(func=cmd_synth)

    d = EndpointConfig()
    p = sub.add_parser("extract", help="extract features from a manifest", formatter_class=fmt)
    p.add_argument("--manifest", required=True, help="manifest CSV")
    p.add_argument("--out", required=True, help="features CSV to write")
    p.add_argument("--strict-shape", action="store_true", help="require a fully crossed subject x word x emotion design")
    p.add_argument("--frame-len", type=float, default=d.frame_len, help="frame length in seconds")
    p.add_argument("--hop", type=float, default=d.hop, help="frame hop in seconds")
    p.add_argument("--rel-threshold", type=float, default=d.rel_threshold, help="energy threshold relative to the loudest frame")
    p.add_argument("--min-onset-frames", type=int, default=d.min_onset_frames, help="active frames needed to start an utterance")
    p.add_argument("--hangover-frames", type=int, default=d.hangover_frames, help="frames kept after the last active frame")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("analyze", help="mixed-model significance of each feature", formatter_class=fmt)
    p.add_argument("--features", required=True, help="features CSV")
    p.add_argument("--out-dir", required=True, help="directory for reports")
    p.add_argument("--random-group", default="gender", choices=("gender", "subject_id", "word"),
                   help="random-intercept grouping factor")
    p.add_argument("--reference", default="happy", choices=("happy", "neutral", "sad"), help="reference emotion")
    p.add_argument("--summary-by", default="gender", choices=("gender", "subject_id", "word", "emotion"),
                   help="factor for the duration group summary")
    p.add_argument("--alpha", type=float, default=0.05, help="significance level marked in the report")
    p.add_argument("--boundary-correction", action="store_true",
                   help="use the 50:50 chi-square mixture when testing the random intercept")
    p.set_defaults(func=cmd_analyze)

    s = SvmConfig()
    g = SigmoidConfig()
    p = sub.add_parser("evaluate", help="cross-validate SVM and sigmoid classifiers", formatter_class=fmt)
    p.add_argument("--features", required=True, help="features CSV")
    p.add_argument("--out-dir", required=True, help="directory for reports")
    p.add_argument("--model", default="both", choices=("svm", "sigmoid", "both"))
    p.add_argument("--columns", default="duration_samples", help="comma-separated feature columns")
    p.add_argument("--folds", type=_folds, default=10, help="number of stratified folds (>= 2)")
    p.add_argument("--seed", type=int, default=42, help="root random seed")
    p.add_argument("--degree", type=int, default=s.degree, help="polynomial kernel degree")
    p.add_argument("--coef0", type=float, default=s.coef0, help="polynomial kernel offset")
    p.add_argument("--gamma", type=float, default=None, help="polynomial kernel scale (default 1/n_features)")
    p.add_argument("--C", type=float, default=s.C, help="SVM box constraint")
    p.add_argument("--tol", type=float, default=s.tol, help="SMO KKT tolerance")
    p.add_argument("--learning-rate", type=float, default=g.learning_rate, help="sigmoid neuron step size")
    p.add_argument("--epochs", type=int, default=g.epochs, help="sigmoid neuron full-batch epochs")
    p.add_argument("--class-weight", choices=("balanced",), default=None, help="reweight classes (off by default)")
    p.set_defaults(func=cmd_evaluate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(format="%(levelname)s: %(message)s", stream=sys.stderr,
                        level=logging.INFO if args.verbose else logging.WARNING, force=True)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
