"""
Command line interface of the prior art search experiments.

Subcommands validate the input data, extract keyword queries, build the
index snapshot, run experiments, grid-search alpha and beta, sweep the
number of keywords and evaluate run files.
Exit codes are 0 on success, 1 on data errors and 2 on invalid arguments or
configuration.
"""


import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import List

from . import settings
from .config import METHODS, PRESETS, ConfigError, RunConfig

from claims.claimgraph import build_claim_graph
from claims.parsetree import ParseTreeError, read_ptb
from corpus.loaders import load_corpus, load_parses, load_qrels
from corpus.models import Diagnostic
from evaluation.experiment import Experiment
from evaluation.grid import grid_search, keyword_sweep
from evaluation.metrics import evaluate_run
from evaluation.significance import randomization_test
from keywords.serializers import write_query_dump
from search.index import build_index, write_snapshot
from search.serializers import read_run, write_run


__all__ = ["EXIT_OK", "EXIT_DATA_ERROR", "EXIT_USAGE", "ValidationSummary",
           "collect_diagnostics", "cmd_validate", "cmd_extract", "cmd_index",
           "cmd_run", "cmd_grid", "cmd_sweep", "cmd_report", "build_parser", "main"]


logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_USAGE = 2


class _ArgumentParser(argparse.ArgumentParser):
    """Reports argument errors as `ConfigError` instead of exiting."""

    def error(self, message):
        raise ConfigError(message)


@dataclass
class ValidationSummary:
    """Counts and diagnostics of the loaded input data."""
    numDocuments: int = 0
    numClaims: int = 0
    numParses: int = 0
    numTopics: int = 0
    skippedDocuments: int = 0
    diagnostics: List[Diagnostic] = field(default_factory=list)

    @property
    def warnings(self):
        return [d for d in self.diagnostics if d.level == "warning"]

    @property
    def errors(self):
        return [d for d in self.diagnostics if d.level == "error"]

    @property
    def exitCode(self):
        return EXIT_DATA_ERROR if self.errors else EXIT_OK

    def render(self):
        lines = [
            f"documents: {self.numDocuments} ({self.skippedDocuments} non-English skipped)",
            f"claims: {self.numClaims}",
            f"parses: {self.numParses}",
            f"topics: {self.numTopics}",
            f"warnings: {len(self.warnings)}",
            f"errors: {len(self.errors)}",
        ]
        lines.extend(str(d) for d in self.diagnostics)
        return "\n".join(lines) + "\n"


def collect_diagnostics(config):
    """Loads the corpus, parses and judgments and checks them.

    Raises
    ------
    corpus.loaders.CorpusFormatError
        When a file is malformed.
    """
    summary = ValidationSummary()
    corpus = load_corpus(config.corpus)
    documents, summary.skippedDocuments = corpus.englishDocuments()
    summary.numDocuments = corpus.num_documents
    summary.numClaims = sum(len(doc.claims) for doc in documents)

    if summary.skippedDocuments:
        summary.diagnostics.append(Diagnostic("warning", "corpus",
                                              f"{summary.skippedDocuments} non-English document(s) skipped"))

    parses = load_parses(config.parses) if config.parses is not None else None
    for doc in documents:
        build_claim_graph(doc, summary.diagnostics)
        if parses is None:
            continue
        for num in parses.missingFor(doc):
            summary.diagnostics.append(Diagnostic("warning", "parses", "missing parse", doc.doc_id, num))
        for claim in doc.claims:
            ptb = parses.get(doc.doc_id, claim.num)
            if ptb is None:
                continue
            summary.numParses += 1
            try:
                read_ptb(ptb)
            except ParseTreeError as e:
                summary.diagnostics.append(Diagnostic("warning", "parses", f"unreadable parse: {e}",
                                                      doc.doc_id, claim.num))

    if config.qrels is not None:
        topics = load_qrels(config.qrels)
        summary.numTopics = len(topics)
        families = corpus.families
        for topic in topics:
            if topic.topic_doc_id not in corpus:
                summary.diagnostics.append(Diagnostic("error", "qrels", "topic document not in corpus",
                                                      topic.topic_doc_id))
                continue
            if not corpus[topic.topic_doc_id].isEnglish:
                summary.diagnostics.append(Diagnostic("warning", "qrels", "non-English topic skipped",
                                                      topic.topic_doc_id))
            for family in sorted(topic.relevant_family_ids):
                if family not in families:
                    summary.diagnostics.append(Diagnostic("warning", "qrels",
                                                          f"relevant family {family} not in corpus",
                                                          topic.topic_doc_id))
    return summary


def _outputPath(config, suffix):
    return os.path.join(config.output_dir, f"{config.run_tag}{suffix}")


def cmd_validate(config, out=sys.stdout):
    """Reports counts and diagnostics of the input data.

    Returns
    -------
    exitCode : `int`
        0 when no fatal problem was found.
    """
    config.validate(requirePaths=("corpus", ))
    summary = collect_diagnostics(config)
    out.write(summary.render())
    return summary.exitCode


def cmd_extract(config, out=sys.stdout, boostMax=None):
    """Writes the query dump of every topic."""
    config.validate(requirePaths=("corpus", "qrels"))
    experiment = Experiment.fromConfig(config, boostMax)
    records = experiment.extractQueries()
    path = _outputPath(config, ".queries.jsonl")
    write_query_dump(records, path)
    out.write(f"{path}\n")
    return EXIT_OK


def cmd_index(config, out=sys.stdout):
    """Builds the index of the corpus and writes its snapshot."""
    config.validate(requirePaths=("corpus", ))
    index = build_index(load_corpus(config.corpus))
    path = config.index if config.index is not None else _outputPath(config, ".index.json")
    write_snapshot(index, path)
    out.write(f"{path}\n")
    return EXIT_OK


def _writeReport(report, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(report.toJson())


def cmd_run(config, out=sys.stdout, boostMax=None):
    """Runs the experiment and writes the query dump, run file and report."""
    config.validate(requirePaths=("corpus", "qrels"))
    experiment = Experiment.fromConfig(config, boostMax)
    records, runs, report = experiment.run()

    write_query_dump(records, _outputPath(config, ".queries.jsonl"))
    write_run(runs, _outputPath(config, ".run"), config.run_tag)
    _writeReport(report, _outputPath(config, ".report.json"))

    out.write(f"{config.systemName}\t"
              f"recall@{report.n_max}={report.meanRecall:.4f}\tpres@{report.n_max}={report.meanPres:.4f}\n")
    return EXIT_OK


def cmd_grid(config, out=sys.stdout, boostMax=None):
    """Grid-searches alpha and beta, writing the whole grid and the best
    point."""
    config.validate(requirePaths=("corpus", "qrels", "parses"))
    if config.method == "baseline":
        raise ConfigError("Grid search requires a claim-structure method, not 'baseline'.")

    experiment = Experiment.fromConfig(config, boostMax)
    result = grid_search(experiment, config.alpha_grid, config.beta_grid)

    content = result.toDict()
    content["metadata"] = experiment.metadata()
    path = _outputPath(config, ".grid.json")
    with open(path, "w", encoding="utf-8") as f:
        f.write(json.dumps(content, indent=2, sort_keys=True) + "\n")

    best = result.report
    out.write(f"best alpha={result.alpha} beta={result.beta} pres@{best.n_max}={best.meanPres:.4f}\n")
    return EXIT_OK


def cmd_sweep(config, out=sys.stdout, boostMax=None):
    """Evaluates every number of keywords from 10 to 100 by 10, writing all
    points and the best one."""
    config.validate(requirePaths=("corpus", "qrels", "parses"))
    if config.method == "baseline":
        raise ConfigError("The keyword sweep requires a claim-structure method, not 'baseline'.")

    experiment = Experiment.fromConfig(config, boostMax)
    result = keyword_sweep(experiment)

    content = result.toDict()
    content["metadata"] = experiment.metadata()
    content["metadata"].pop("keywords")
    path = _outputPath(config, ".sweep.json")
    with open(path, "w", encoding="utf-8") as f:
        f.write(json.dumps(content, indent=2, sort_keys=True) + "\n")

    best = result.report
    out.write(f"best top_n={result.top_n} pres@{best.n_max}={best.meanPres:.4f}\n")
    return EXIT_OK


def cmd_report(config, runPath, comparePath=None, out=sys.stdout):
    """Evaluates a run file, optionally testing it against a second run.

    Parameters
    ----------
    config : `priorart.config.RunConfig`
        Configuration naming the judgments, cut-off, seed and iterations.
    runPath : `str`
        Run file to evaluate.
    comparePath : `str` or `None`, optional
        Run file of the system to compare with.
    out : `io.TextIOBase`, optional
        Where the JSON report is written.
    """
    config.validate(requirePaths=("qrels", ))
    topics = load_qrels(config.qrels)
    report = evaluate_run(read_run(runPath), topics, config.n_max, {"run": os.path.basename(runPath)})
    content = report.toDict()

    if comparePath is not None:
        other = evaluate_run(read_run(comparePath), topics, config.n_max, {"run": os.path.basename(comparePath)})
        content["comparison"] = {
            "run": os.path.basename(comparePath),
            "mean": other.toDict()["mean"],
            "iterations": config.iterations,
            "seed": config.seed,
            "p_value": {
                f"recall@{config.n_max}": randomization_test(report.perTopic("recall"), other.perTopic("recall"),
                                                             config.iterations, config.seed),
                f"pres@{config.n_max}": randomization_test(report.perTopic("pres"), other.perTopic("pres"),
                                                           config.iterations, config.seed),
            },
        }

    out.write(json.dumps(content, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _addRunArguments(parser):
    parser.add_argument("--config", help="YAML or JSON run configuration file.")
    parser.add_argument("--preset", choices=sorted(PRESETS), help="Named system variant.")
    parser.add_argument("--method", choices=METHODS)
    parser.add_argument("--top-n", dest="top_n", type=int, help="Number of keywords, 10 to 100 by 10.")
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--beta", type=float)
    parser.add_argument("--boost", action=argparse.BooleanOptionalAction, help="Use scores as query boosts.")
    parser.add_argument("--retag", action=argparse.BooleanOptionalAction, help="Apply the POS retag correction.")
    parser.add_argument("--n-max", dest="n_max", type=int, help="Evaluation cut-off.")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--iterations", type=int, help="Randomization test iterations.")
    parser.add_argument("--keywords", dest="baseline_k", type=int, help="Baseline keyword count.")
    parser.add_argument("--run-tag", dest="run_tag")
    parser.add_argument("--corpus")
    parser.add_argument("--parses")
    parser.add_argument("--qrels")
    parser.add_argument("--index")
    parser.add_argument("--output-dir", dest="output_dir")


def build_parser():
    parser = _ArgumentParser(prog="priorart", description=__doc__.strip().splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    commands = {
        "validate": "Check the corpus, parses and judgments.",
        "extract": "Write the keyword query of every topic.",
        "index": "Build the index snapshot of the corpus.",
        "run": "Retrieve and evaluate every topic.",
        "grid": "Grid-search alpha and beta.",
        "sweep": "Evaluate every number of keywords.",
        "report": "Evaluate a run file.",
    }
    for name, help in commands.items():
        sub = subparsers.add_parser(name, help=help)
        _addRunArguments(sub)
        if name == "report":
            sub.add_argument("run", help="Run file to evaluate.")
            sub.add_argument("--compare", help="Second run file, tested for significance.")
    return parser


_OVERRIDE_KEYS = ("preset", "method", "top_n", "alpha", "beta", "boost", "retag", "n_max", "seed",
                  "iterations", "baseline_k", "run_tag", "corpus", "parses", "qrels", "index", "output_dir")


def main(argv=None, out=sys.stdout):
    """Runs a subcommand.

    Returns
    -------
    exitCode : `int`
        0 on success, 1 on data errors, 2 on invalid arguments.
    """
    try:
        args = build_parser().parse_args(argv)
        overrides = {key: getattr(args, key) for key in _OVERRIDE_KEYS}
        config = RunConfig.fromSources(args.config, overrides, base=settings.RUN_DEFAULTS)
        os.makedirs(config.output_dir, exist_ok=True)
        settings.configure_logging(config.output_dir)

        if args.command == "validate":
            return cmd_validate(config, out)
        if args.command == "extract":
            return cmd_extract(config, out, settings.BOOST_MAX)
        if args.command == "index":
            return cmd_index(config, out)
        if args.command == "run":
            return cmd_run(config, out, settings.BOOST_MAX)
        if args.command == "grid":
            return cmd_grid(config, out, settings.BOOST_MAX)
        if args.command == "sweep":
            return cmd_sweep(config, out, settings.BOOST_MAX)
        return cmd_report(config, args.run, args.compare, out)

    except ConfigError as e:
        sys.stderr.write(f"error: {e.message}\n")
        return EXIT_USAGE
    except (ValueError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_DATA_ERROR
