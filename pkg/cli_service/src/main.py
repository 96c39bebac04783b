"""
Command-line front end for real vector arithmetic over Q(alpha).

    python -m cli_service.src.main vec mul --field sqrt23.json "[1,1,1,1]" "[1,1,-1,-1]"
    python -m cli_service.src.main signal conv --field i.json a.json b.json
    python -m cli_service.src.main solve exact --field f.json A.json b.json
    python -m cli_service.src.main demo

Results go to stdout; logs and the structured error payload go to stderr.
Exit codes: 0 success, 1 failed demo or internal error, 2 parse error,
3 math error, 4 field validation error.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import mpmath
import pydantic

from core_algebra.engine.demo import DemoRunner, render_report
from core_algebra.engine.linear import FieldMatrix, least_squares, solve
from core_algebra.engine.quantize import RealVector, eps_arith, epsilon_lift, quantize
from core_algebra.engine.signal import VectorSignal, convolve, filter_signal, gram_schmidt, signal_inner
from core_algebra.field.element import conjugate, field_inverse, inner_product
from core_algebra.field.number_field import NumberField
from core_algebra.parser.codec import (
    VectorCodec, field_to_dict, load_field_spec, load_matrix, load_rhs, load_signal,
    matrix_to_dict, signal_to_dict,
)
from core_algebra.schemas.models import CliConfig
from shared_utils.config_loader import Settings, get_settings
from shared_utils.constants import (
    ArithOp, CoefficientOrder, ExitCode, LogScope, Norm, OutputFormat, QuantizerKind,
)
from shared_utils.error_handler import ConfigurationError, ValidationError, exit_code_for, handle_error
from shared_utils.logging_utils import ContextualLogger, configure_logging

logger = ContextualLogger(scope=LogScope.CLI)

VEC_BINARY = ("add", "sub", "mul", "div", "inner")
VEC_UNARY = ("inv", "conj")
ROOT_DIGITS = 10


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as ValidationError."""

    def error(self, message: str):
        raise ValidationError(message, context={"usage": self.format_usage().strip()})


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's copy of a flag from overwriting the top-level one
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", dest="field_spec_path", default=argparse.SUPPRESS,
                        help="Field specification JSON file")
    common.add_argument("--epsilon", default=argparse.SUPPRESS,
                        help="Approximation tolerance for real inputs (decimal or num/den)")
    common.add_argument("--norm", choices=[n.value for n in Norm], default=argparse.SUPPRESS)
    common.add_argument("--quantizer", choices=[q.value for q in QuantizerKind], default=argparse.SUPPRESS)
    common.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat],
                        default=argparse.SUPPRESS)
    common.add_argument("--order", choices=[o.value for o in CoefficientOrder], default=argparse.SUPPRESS,
                        help="Coefficient order of vectors on input and output")
    return common


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = _global_flags()
    parser = CliParser(
        prog="rva",
        description=f"{settings.app_name} {settings.app_version}: exact arithmetic on real vectors via Q(alpha)",
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)

    vec = commands.add_parser("vec", parents=[common], help="Field arithmetic on vectors")
    vec.add_argument("op", choices=VEC_BINARY + VEC_UNARY)
    vec.add_argument("vectors", nargs="+", help="Vectors such as '[1, 1/2, 0.25]'")

    sig = commands.add_parser("signal", parents=[common], help="Vector-valued signal operations")
    sig.add_argument("op", choices=["conv", "filter", "inner", "gram"])
    sig.add_argument("files", nargs="+", help="Signal JSON files")
    sig.add_argument("--output", default=None, help="Write the resulting JSON here instead of stdout")

    slv = commands.add_parser("solve", parents=[common], help="Linear systems over the field")
    slv.add_argument("method", choices=["exact", "lsq"])
    slv.add_argument("matrix", help="Matrix JSON file")
    slv.add_argument("rhs", help="Right-hand side: matrix JSON or signal JSON read as a column")

    qnt = commands.add_parser("quantize", parents=[common], help="Rational vector within epsilon")
    qnt.add_argument("vector")

    commands.add_parser("demo", parents=[common], help="Reproduce the worked examples")

    fld = commands.add_parser("field", parents=[common], help="Field specification tools")
    fld.add_argument("action", choices=["info"])
    return parser


def _config(args: argparse.Namespace, settings: Settings) -> CliConfig:
    try:
        return CliConfig(
            field_spec_path=getattr(args, "field_spec_path", None),
            epsilon=getattr(args, "epsilon", settings.default_epsilon),
            norm=getattr(args, "norm", settings.default_norm),
            quantizer=getattr(args, "quantizer", settings.default_quantizer),
            output_format=getattr(args, "output_format", OutputFormat.TABLE),
            order=getattr(args, "order", CoefficientOrder.ASC),
        )
    except pydantic.ValidationError as e:
        first = e.errors()[0]
        raise ValidationError(
            f"invalid option: {first['msg']}",
            context={"option": [str(p) for p in first.get("loc", ())]},
        ) from e


def _require_field(cfg: CliConfig, settings: Settings) -> NumberField:
    if cfg.field_spec_path is None:
        raise ValidationError("this command needs --field <path>")
    return load_field_spec(cfg.field_spec_path, settings)


def _real_vector(text: str, cfg: CliConfig) -> RealVector:
    return RealVector.parse(VectorCodec.parse_text(text, cfg.order))


def _vector_out(coeffs: Sequence, cfg: CliConfig) -> str:
    return VectorCodec.format(coeffs, cfg.output_format, cfg.order)


def cmd_vec(args: argparse.Namespace, cfg: CliConfig, settings: Settings) -> str:
    field = _require_field(cfg, settings)
    eps = cfg.epsilon_config()
    expected = 2 if args.op in VEC_BINARY else 1
    if len(args.vectors) != expected:
        raise ValidationError(
            f"vec {args.op} takes {expected} vector(s), got {len(args.vectors)}",
            context={"op": args.op},
        )
    vectors = [_real_vector(v, cfg) for v in args.vectors]

    if args.op == "inner":
        result = inner_product(epsilon_lift(vectors[0], field, eps), epsilon_lift(vectors[1], field, eps))
    elif args.op == "inv":
        result = field_inverse(epsilon_lift(vectors[0], field, eps))
    elif args.op == "conj":
        result = conjugate(epsilon_lift(vectors[0], field, eps))
    else:
        result = eps_arith(ArithOp(args.op), vectors[0], vectors[1], field, eps)
    return _vector_out(result.coeffs, cfg)


def _dump(data: Any, output: Optional[str]) -> str:
    text = json.dumps(data, indent=2)
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
        logger.info("output_written", path=output)
        return ""
    return text


def cmd_signal(args: argparse.Namespace, cfg: CliConfig, settings: Settings) -> str:
    field = _require_field(cfg, settings)
    signals: List[VectorSignal] = [load_signal(f, field, cfg.order) for f in args.files]
    if args.op == "gram":
        return _dump([signal_to_dict(s, cfg.order) for s in gram_schmidt(signals)], args.output)
    if len(signals) != 2:
        raise ValidationError(f"signal {args.op} takes 2 files, got {len(signals)}", context={"op": args.op})
    if args.op == "inner":
        return _vector_out(signal_inner(signals[0], signals[1]).coeffs, cfg)
    op = convolve if args.op == "conv" else filter_signal
    return _dump(signal_to_dict(op(signals[0], signals[1]), cfg.order), args.output)


def _matrix_out(matrix: FieldMatrix, cfg: CliConfig) -> str:
    if cfg.output_format is OutputFormat.JSON:
        return json.dumps(matrix_to_dict(matrix, cfg.order))
    return "\n".join(
        " ".join(VectorCodec.format(e.coeffs, OutputFormat.TABLE, cfg.order) for e in row)
        for row in matrix.entries
    )


def cmd_solve(args: argparse.Namespace, cfg: CliConfig, settings: Settings) -> str:
    field = _require_field(cfg, settings)
    a = load_matrix(args.matrix, field, cfg.order)
    b = load_rhs(args.rhs, field, cfg.order)
    x = solve(a, b) if args.method == "exact" else least_squares(a, b)
    return _matrix_out(x, cfg)


def cmd_quantize(args: argparse.Namespace, cfg: CliConfig, settings: Settings) -> str:
    return _vector_out(quantize(_real_vector(args.vector, cfg), cfg.epsilon_config()), cfg)


def cmd_field_info(args: argparse.Namespace, cfg: CliConfig, settings: Settings) -> str:
    field = _require_field(cfg, settings)
    root = field.numeric_root
    with mpmath.workdps(field.working_dps):
        if abs(root.imag) < mpmath.mpf(settings.embedding_tolerance):
            root_text = mpmath.nstr(root.real, ROOT_DIGITS)
        else:
            root_text = mpmath.nstr(root, ROOT_DIGITS)
    info: Dict[str, Any] = {
        **field_to_dict(field),
        "degree": field.degree,
        "polynomial": str(field.min_poly),
        "verified": field.verified,
        "root": root_text,
    }
    if cfg.output_format is OutputFormat.JSON:
        return json.dumps(info)
    return "\n".join([
        f"degree:      {info['degree']}",
        f"min_poly:    {info['polynomial']}",
        f"conjugation: {field.conjugation.kind.value}",
        f"verified:    {'yes' if field.verified else 'no'}",
        f"root:        {info['root']}",
    ])


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch, and print the result.

    Returns:
        Process exit code
    """
    try:
        settings = get_settings()
    except pydantic.ValidationError as e:
        error = ConfigurationError(f"invalid settings: {e.errors()[0]['msg']}")
        print(json.dumps(error.to_dict()), file=sys.stderr)
        return error.exit_code
    configure_logging(settings.log_level, settings.log_format)

    try:
        args = build_parser(settings).parse_args(argv)
        cfg = _config(args, settings)
        logger.debug("command_started", command=args.command)

        if args.command == "demo":
            override = load_field_spec(cfg.field_spec_path, settings) if cfg.field_spec_path else None
            report = DemoRunner(field_override=override, settings=settings).run()
            print(render_report(report, cfg.output_format))
            return int(ExitCode.SUCCESS if report.all_passed else ExitCode.FAILURE)

        handlers = {
            "vec": cmd_vec,
            "signal": cmd_signal,
            "solve": cmd_solve,
            "quantize": cmd_quantize,
            "field": cmd_field_info,
        }
        out = handlers[args.command](args, cfg, settings)
        if out:
            print(out)
        return int(ExitCode.SUCCESS)
    except Exception as e:
        print(json.dumps(handle_error(e, scope=LogScope.CLI), default=str), file=sys.stderr)
        return exit_code_for(e)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
