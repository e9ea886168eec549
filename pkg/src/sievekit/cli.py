"""Command-line front end: train, classify, evaluate, roc, generate, experiment.

Exit codes: 0 success, 1 usage error, 2 data error, 3 training failure.
The seed falls back to the SIEVEKIT_SEED environment variable when --seed is
not given.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .corpus import load_dataset, parse_message, write_corpus
from .errors import DataError, TrainingError
from .experiment import ExperimentPlan, run_experiment, sweep_csv
from .metrics import DEFAULT_LAMBDAS, metrics_csv, metrics_table, roc_csv
from .models import KINDS, classify, evaluate_model, load_model, save_model, train_model
from .synth import generate, load_generator_spec


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; usage errors are 1
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_lambdas(text: str):
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        value = float(part)
        out.append(int(value) if value == int(value) else value)
    return tuple(out) if out else DEFAULT_LAMBDAS


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.split(",") if p.strip())


def _default_seed() -> int:
    return int(os.environ.get("SIEVEKIT_SEED", "0"))


def _add_train_flags(p):
    p.add_argument("--features", type=int, default=50, help="number of features to select")
    p.add_argument("--fields", default="subject,body",
                   help="message parts to tokenize (comma list of subject,body)")
    p.add_argument("--seed", type=int, default=None, help="training seed")
    p.add_argument("--alpha", type=float, default=1.0, help="NB smoothing")
    p.add_argument("--C", type=float, default=1.0, help="SVM soft-margin cost")
    p.add_argument("--epochs", type=int, default=50, help="SVM training epochs")
    p.add_argument("--k", type=int, default=5, help="k-NN neighbor count")
    p.add_argument("--vote-exponent", type=float, default=1.0,
                   help="k-NN inverse-distance vote exponent")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sievekit", description="statistical spam filtering toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a classifier on a corpus and save the model")
    p.add_argument("--corpus", required=True)
    p.add_argument("--model", required=True, help="output model path")
    p.add_argument("--classifier", required=True, choices=KINDS)
    _add_train_flags(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("classify", help="classify one message from a file or stdin")
    p.add_argument("--model", required=True)
    p.add_argument("message", nargs="?", help="message file (default: stdin)")
    p.add_argument("--threshold", type=float, default=0.0)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("evaluate", help="evaluate a saved model on a test corpus")
    p.add_argument("--model", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--lambda", dest="lambdas", default="", help="comma list, default 1,9,999")
    p.add_argument("--out", default=".", help="directory for metrics.csv and roc.csv")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("roc", help="write the ROC curve of a model on a corpus")
    p.add_argument("--model", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", default="roc.csv")
    p.set_defaults(func=cmd_roc)

    p = sub.add_parser("generate", help="generate a synthetic corpus from a spec file")
    p.add_argument("--spec", required=True, help="key=value generator spec file")
    p.add_argument("--out", required=True, help="corpus directory to create")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("experiment", help="run a classifier/size/features sweep")
    p.add_argument("--corpus", required=True)
    p.add_argument("--classifiers", default=",".join(KINDS))
    p.add_argument("--sizes", required=True, help="comma list of data sizes")
    p.add_argument("--features", required=True, help="comma list of feature counts")
    p.add_argument("--lambda", dest="lambdas", default="", help="comma list, default 1,9,999")
    p.add_argument("--train-fraction", type=float, default=0.7)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--fields", default="subject,body")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--C", type=float, default=1.0)
    p.add_argument("--epochs", type=int, default=50)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--vote-exponent", type=float, default=1.0)
    p.add_argument("--out", default="sweep.csv")
    p.set_defaults(func=cmd_experiment)
    return parser


def cmd_train(args) -> int:
    ds = load_dataset(args.corpus)
    seed = args.seed if args.seed is not None else _default_seed()
    model = train_model(args.classifier, ds, args.features,
                        fields=args.fields.split(","), seed=seed, alpha=args.alpha,
                        C=args.C, epochs=args.epochs, k=args.k,
                        vote_exponent=args.vote_exponent)
    save_model(model, args.model)
    print(f"kind={model.kind} d={model.feature_set.d} train_size={len(ds)}")
    return 0


def cmd_classify(args) -> int:
    model = load_model(args.model)
    if args.message:
        try:
            raw = Path(args.message).read_bytes()
        except OSError as exc:
            raise DataError(f"cannot read message {args.message}: {exc}") from exc
    else:
        raw = sys.stdin.buffer.read()
    label, score = classify(model, parse_message(raw), args.threshold)
    print(f"{label.name}\t{score!r}")
    return 0


def cmd_evaluate(args) -> int:
    model = load_model(args.model)
    ds = load_dataset(args.corpus)
    lambdas = _parse_lambdas(args.lambdas)
    result = evaluate_model(model, ds, lambdas)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "metrics.csv").write_text(metrics_csv(result.report), encoding="utf-8")
    (out / "roc.csv").write_text(roc_csv(result.roc), encoding="utf-8")
    sys.stdout.write(metrics_table(result.report))
    return 0


def cmd_roc(args) -> int:
    model = load_model(args.model)
    ds = load_dataset(args.corpus)
    result = evaluate_model(model, ds)
    Path(args.out).write_text(roc_csv(result.roc), encoding="utf-8")
    print(f"auc={result.roc.auc!r}")
    return 0


def cmd_generate(args) -> int:
    spec = load_generator_spec(args.spec)
    ds = generate(spec)
    write_corpus(ds, args.out)
    print(f"wrote {len(ds)} messages ({ds.spam_count} spam) to {args.out}")
    return 0


def cmd_experiment(args) -> int:
    ds = load_dataset(args.corpus)
    seed = args.seed if args.seed is not None else _default_seed()
    lambdas = _parse_lambdas(args.lambdas)
    plan = ExperimentPlan(
        classifiers=tuple(args.classifiers.split(",")),
        sizes=_parse_int_list(args.sizes),
        feature_counts=_parse_int_list(args.features),
        lambdas=lambdas,
        train_fraction=args.train_fraction,
        seed=seed,
        params=dict(alpha=args.alpha, C=args.C, epochs=args.epochs, k=args.k,
                    vote_exponent=args.vote_exponent),
        fields=tuple(args.fields.split(",")),
    )
    rows = run_experiment(ds, plan)
    Path(args.out).write_text(sweep_csv(rows, lambdas), encoding="utf-8")
    print(f"wrote {len(rows)} sweep rows to {args.out}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except DataError as exc:
        print(f"sievekit: data error: {exc}", file=sys.stderr)
        return 2
    except TrainingError as exc:
        print(f"sievekit: training error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"sievekit: invalid arguments: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
