"""Command-line front end.

    python cli.py classify eg1
    python cli.py invariants det4 --oracle-degree 3 --json
"""
import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import config
from algebra.field import field_to_json
from analysis.caseb import caseb_local_invariants, orbit_is_translation_stable
from analysis.separators import graph_separators, orbit_separation_check
from analysis.vde import LocalizedInvariantRing, certify, quasi_principle_generators, vde_generators
from errors import BudgetExceeded, CocycleViolation, GaInvariantError, SchemaError
from orchestrator import ClassificationOrchestrator
from pairs.fundamental import fundamental_generator, fundamental_witness
from pairs.pair import PRINCIPLE, kernel_acts_trivially
from pairs.search import find_pairs_bounded, pair_field
from representation.coaction import homogeneous_invariants, invariant_covectors, linear_form
from representation.garep import Representation, validate
from services.fixture_service import FixtureService
from services.report_service import ReportService

COMMANDS = ('validate', 'classify', 'pairs', 'invariants', 'separators', 'oracle')

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_SCHEMA = 4

logger = logging.getLogger('cli')


@dataclass
class RunConfig:
    command: str
    input: str
    max_degree: int = config.MAX_DEGREE
    oracle_degree: int = config.ORACLE_DEGREE
    seed: int = config.DEFAULT_SEED
    ext: int = config.EXTENSION_DEGREE
    output: str = 'text'
    budget: int = config.GROEBNER_BUDGET
    samples: int = 100

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.budget <= 0 or self.max_degree < 1 or self.ext < 1 or self.oracle_degree < 0 \
                or self.samples < 1:
            raise ValueError("budgets and degrees must be positive")


def _validate(rep: Representation, cfg: RunConfig) -> Dict[str, Any]:
    validate(rep)
    return {'command': 'validate', 'valid': True, 'n': rep.n, 'entries': len(rep.q)}


def _classify(rep: Representation, cfg: RunConfig) -> Dict[str, Any]:
    report = ClassificationOrchestrator().classify(rep, cfg.max_degree, cfg.ext)
    payload = report.to_json()
    payload['command'] = 'classify'
    payload['structurally_certified'] = report.structurally_certified
    return payload


def _pairs(rep: Representation, cfg: RunConfig) -> Dict[str, Any]:
    validate(rep)
    rep = rep.extend(pair_field(rep, 1))
    pairs = find_pairs_bounded(rep, cfg.max_degree, config.MONOMIAL_CAP, config.CANDIDATE_CAP)
    payload: Dict[str, Any] = {'command': 'pairs', 'search_degree': cfg.max_degree,
                               'field': field_to_json(rep.field),
                               'pairs': [pr.to_json() for pr in pairs], 'fundamental': None}
    if pairs:
        b = fundamental_generator(rep, pairs)
        payload['fundamental'] = b.to_json()
        payload['fundamental_t'] = str(b)
        payload['witness'] = fundamental_witness(rep, pairs, b).to_json()
    return payload


def _ring_payload(ring: LocalizedInvariantRing, method: str) -> Dict[str, Any]:
    payload = ring.to_json()
    payload['method'] = method
    return payload


def _invariants(rep: Representation, cfg: RunConfig) -> Dict[str, Any]:
    validate(rep)
    payload: Dict[str, Any] = {'command': 'invariants', 'search_degree': cfg.max_degree,
                               'oracle_degree': cfg.oracle_degree}
    pairs = find_pairs_bounded(rep, cfg.max_degree, config.MONOMIAL_CAP, config.CANDIDATE_CAP)
    if not pairs:
        # no pairs: measure how far the invariant linear forms generate
        forms = [linear_form(rep, v) for v in invariant_covectors(rep)]
        ring = LocalizedInvariantRing(forms, rep.ring.one(), [0] * len(forms))
        certify(rep, ring, cfg.oracle_degree)
        payload.update(_ring_payload(ring, 'invariant linear forms'))
        return payload

    b = fundamental_generator(rep, pairs)
    witness = fundamental_witness(rep, pairs, b)
    payload['fundamental_t'] = str(b)
    payload['witness'] = witness.to_json()
    if kernel_acts_trivially(rep, b):
        if witness.kind == PRINCIPLE:
            ring = vde_generators(rep, witness, cfg.oracle_degree)
            payload.update(_ring_payload(ring, 'slice substitution'))
        else:
            ring = quasi_principle_generators(rep, witness, cfg.oracle_degree)
            payload.update(_ring_payload(ring, 'slice substitution through b(t)'))
        return payload

    data = caseb_local_invariants(rep, witness, cfg.oracle_degree)
    payload.update(data.to_json())
    payload['method'] = 'symmetric functions of the Galois orbit'
    payload['generators'] = [str(f) for f in data.generators]
    payload['translation_stable'] = orbit_is_translation_stable(data)
    payload['complete_up_to'] = data.complete_up_to
    return payload


def _separators(rep: Representation, cfg: RunConfig) -> Dict[str, Any]:
    validate(rep)
    result = graph_separators(rep, cfg.budget)
    check = orbit_separation_check(rep, result, cfg.samples, cfg.ext, cfg.seed)
    payload = result.to_json()
    payload['command'] = 'separators'
    payload['generators'] = list(payload['invariants'])
    payload['separation'] = check.to_json()
    payload['separates'] = check.separates
    return payload


def _oracle(rep: Representation, cfg: RunConfig) -> Dict[str, Any]:
    validate(rep)
    by_degree = {d: [str(f) for f in homogeneous_invariants(rep, d, config.MONOMIAL_CAP)]
                 for d in range(cfg.oracle_degree + 1)}
    return {'command': 'oracle', 'oracle_degree': cfg.oracle_degree,
            'dimension': sum(len(v) for v in by_degree.values()),
            'by_degree': {str(d): v for d, v in by_degree.items()}}


HANDLERS = {
    'validate': _validate,
    'classify': _classify,
    'pairs': _pairs,
    'invariants': _invariants,
    'separators': _separators,
    'oracle': _oracle,
}


def run(cfg: RunConfig, fixtures: Optional[FixtureService] = None) -> Tuple[int, Dict[str, Any]]:
    """Dispatch one command; returns the exit code and the report"""
    fixtures = fixtures or FixtureService()
    saved_budget = config.GROEBNER_BUDGET
    config.GROEBNER_BUDGET = cfg.budget
    try:
        rep = fixtures.load(cfg.input)
        return EXIT_OK, HANDLERS[cfg.command](rep, cfg)
    except SchemaError as exc:
        logger.error(f"Schema error: {exc}")
        return EXIT_SCHEMA, {'command': cfg.command, 'error': 'SchemaError', 'detail': str(exc)}
    except CocycleViolation as exc:
        logger.error(f"Invalid representation: {exc}")
        return EXIT_INVALID, {'command': cfg.command, 'error': 'CocycleViolation', 'entry': list(exc.entry),
                              'reason': exc.reason, 'residual': str(exc.residual)}
    except BudgetExceeded as exc:
        logger.error(f"Budget exhausted: {exc}")
        return EXIT_BUDGET, {'command': cfg.command, 'error': type(exc).__name__, 'detail': str(exc)}
    except GaInvariantError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        payload = {'command': cfg.command, 'error': type(exc).__name__, 'detail': str(exc)}
        if hasattr(exc, 'entry'):
            payload['entry'] = list(exc.entry)
        return EXIT_ERROR, payload
    finally:
        config.GROEBNER_BUDGET = saved_budget


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Invariant theory of unipotent G_a-representations in characteristic p")
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('input', help="representation JSON file or fixture name")
    parser.add_argument('--max-degree', type=int, default=config.MAX_DEGREE, help="degree bound of the pair search")
    parser.add_argument('--oracle-degree', type=int, default=config.ORACLE_DEGREE,
                        help="degree bound for oracle cross-checks")
    parser.add_argument('--seed', type=int, default=config.DEFAULT_SEED)
    parser.add_argument('--ext', type=int, default=config.EXTENSION_DEGREE,
                        help="extension degree of the sampling field")
    parser.add_argument('--json', action='store_true', help="emit the JSON report")
    parser.add_argument('--budget', type=int, default=config.GROEBNER_BUDGET,
                        help="S-pair reductions per Groebner basis run")
    parser.add_argument('--samples', type=int, default=100, help="point pairs drawn by the orbit-separation check")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, config.LOG_LEVEL.upper(), logging.INFO),
                        format='%(asctime)s %(name)s %(levelname)s %(message)s', stream=sys.stderr)
    try:
        cfg = RunConfig(args.command, args.input, args.max_degree, args.oracle_degree, args.seed, args.ext,
                        'json' if args.json else 'text', args.budget, args.samples)
    except ValueError as exc:
        logger.error(str(exc))
        return EXIT_ERROR
    code, payload = run(cfg)
    reports = ReportService()
    if cfg.output == 'json':
        print(reports.to_json(payload))
    else:
        print(reports.text(payload))
    return code


if __name__ == '__main__':
    sys.exit(main())
