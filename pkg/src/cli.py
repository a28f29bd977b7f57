"""
CLI Interface for the Kahler cup-square toolkit
"""
import argparse
import logging
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv

from .boundary_invariants import cartan
from .certificate import check_certificate, read_certificate, write_certificate
from .cochain_algebra import cup_square
from .constants import print_constants
from .exceptions import GeometryError, LiteralSyntaxError
from .hermitian_space import HermitianModel, cayley, heisenberg_coordinates
from .literals import format_heisenberg, format_point, parse_point, read_group_file, read_point_file
from .paper_verifier import verify_paper
from .report import Report
from .search.engine import search
from .search.face_orbits import SearchOptions

# Load environment variables
load_dotenv()

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

logger = logging.getLogger('CupSquare')


def setup_logging(log_file: str = 'cupsq.log', level: str = 'INFO'):
    """Setup logging configuration; reports go to stdout, log records to the file and stderr"""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(log_file),
            logging.StreamHandler(sys.stderr)
        ],
        force=True,
    )


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors surface as exit code 2 without leaving run()"""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"[ERROR] {message}", file=sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog='cupsq',
        description='Exact boundary geometry of the complex hyperbolic plane and cup-square norm certificates',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Cartan invariant of three ball points
  python -m src.cli cartan "ball: 1,0,1" "ball: i,0,1" "ball: 0,1,1"

  # Cup square of five points, with the 120-term evaluator
  python -m src.cli cupsq "1,0,1" "i,0,1" "0,1,1" "0,i,1" "0,-i,1" --oracle

  # Reproduce every published check
  python -m src.cli verify-paper

  # Search a certificate and re-check it
  python -m src.cli search --points points.txt --group group.txt --out best.cert
  python -m src.cli check-cert best.cert
        """
    )

    # Global arguments
    parser.add_argument('--log-file', type=str, help='Log file (or set CUPSQ_LOG_FILE, default: cupsq.log)')
    parser.add_argument('--log-level', type=str, help='Log level (or set CUPSQ_LOG_LEVEL, default: INFO)')
    parser.add_argument('--threads', type=int, help='Worker threads for search (or set CUPSQ_THREADS, default: 1)')

    subparsers = parser.add_subparsers(dest='command', help='Command')

    cartan_parser = subparsers.add_parser('cartan', help='Cartan angular invariant of three boundary points')
    for name in ('p', 'q', 'r'):
        cartan_parser.add_argument(name, type=str, help='Point literal')
    cartan_parser.add_argument('--model', choices=['ball', 'siegel'], default='ball', help='Model for bare literals')

    cupsq_parser = subparsers.add_parser('cupsq', help='Cup square of the Kahler cocycle on five points')
    cupsq_parser.add_argument('points', nargs=5, type=str, help='Five point literals')
    cupsq_parser.add_argument('--model', choices=['ball', 'siegel'], default='ball', help='Model for bare literals')
    cupsq_parser.add_argument('--oracle', action='store_true', help='Use the 120-term alternation evaluator')

    subparsers.add_parser('verify-paper', help="Run every check of the norm bracket")

    constants_parser = subparsers.add_parser('constants', help='Volume, simplicial volume and Milnor-Wood constants')
    constants_parser.add_argument('--chi', type=int, required=True, help='Euler characteristic (positive)')

    search_parser = subparsers.add_parser('search', help='Search a lower-bound certificate')
    search_parser.add_argument('--points', type=str, required=True, help='Point file, one literal per line')
    search_parser.add_argument('--group', type=str, required=True, help='Group file, one holo:/anti: matrix per line')
    search_parser.add_argument('--model', choices=['ball', 'siegel'], default='ball', help='Model for bare literals')
    search_parser.add_argument('--max-tuples', type=int, default=10000, help='Cap on candidate 5-tuples (default: 10000)')
    search_parser.add_argument('--word-length', type=int, default=4, help='Closure word length (default: 4)')
    search_parser.add_argument('--antiholomorphic', action='store_true', help='Include antiholomorphic elements')
    search_parser.add_argument('--out', type=str, help='Write the certificate to this file')

    check_parser = subparsers.add_parser('check-cert', help='Re-verify a certificate file independently')
    check_parser.add_argument('cert', type=str, help='Certificate file')

    convert_parser = subparsers.add_parser('convert', help='Convert a point between models')
    convert_parser.add_argument('point', type=str, help='Point literal')
    convert_parser.add_argument('--to', choices=['ball', 'siegel', 'heis'], required=True, help='Target model')
    convert_parser.add_argument('--model', choices=['ball', 'siegel'], default='ball', help='Model for bare literals')

    return parser


def _setting(flag, env: str, default):
    if flag is not None:
        return flag
    return os.getenv(env) or default


def print_report(report: Report) -> int:
    """Print a report between banners and map it to an exit code"""
    print(f"\n{'='*60}")
    print(report.render())
    print(f"{'='*60}")
    if report.passed:
        print("[OK] All checks passed\n")
        return EXIT_OK
    print(f"[ERROR] {len(report.failures)} checks failed. Check logs for details.\n")
    return EXIT_FAILED


def _cartan(args) -> int:
    model = HermitianModel.from_name(args.model)
    points = [parse_point(text, model) for text in (args.p, args.q, args.r)]
    print(cartan(*points))
    return EXIT_OK


def _cupsq(args) -> int:
    model = HermitianModel.from_name(args.model)
    points = [parse_point(text, model) for text in args.points]
    print(cup_square(points, oracle=args.oracle))
    return EXIT_OK


def _convert(args) -> int:
    point = parse_point(args.point, HermitianModel.from_name(args.model))
    if args.to == 'heis':
        siegel = cayley(point, HermitianModel.SIEGEL)
        text = format_heisenberg(heisenberg_coordinates(siegel))
        exact = siegel.is_exact
    else:
        converted = cayley(point, HermitianModel.from_name(args.to))
        text = format_point(converted)
        exact = converted.is_exact
    print(text if exact else f"{text}  # inexact")
    return EXIT_OK


def _search(args, threads: int) -> int:
    model = HermitianModel.from_name(args.model)
    points = read_point_file(args.points, model)
    group = read_group_file(args.group, points[0].model if points else model)
    opts = SearchOptions(
        max_tuples=args.max_tuples,
        word_length=args.word_length,
        include_antiholomorphic=args.antiholomorphic,
        threads=threads,
    )
    cert = search(points, group, opts)
    print(f"\n{'='*60}")
    print("Certificate Search Result")
    print(f"{'='*60}")
    print(f"Tuples: {len(cert.tuples)}")
    print(f"Nonzero coefficients: {sum(1 for c in cert.coefficients if c)}")
    print(f"bound: {cert.bound_value}")
    if args.out:
        write_certificate(cert, args.out)
        print(f"Certificate written to {args.out}")
    print(f"{'='*60}\n")
    return EXIT_OK if cert.is_valid else EXIT_FAILED


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one command and return the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return EXIT_USAGE
    except SystemExit as e:
        # --help exits 0 from inside argparse
        return EXIT_OK if not e.code else EXIT_USAGE

    setup_logging(
        _setting(args.log_file, 'CUPSQ_LOG_FILE', 'cupsq.log'),
        _setting(args.log_level, 'CUPSQ_LOG_LEVEL', 'INFO'),
    )

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    try:
        threads = int(_setting(args.threads, 'CUPSQ_THREADS', 1))
        if threads < 1:
            raise ValueError(f"threads must be at least 1, got {threads}")

        if args.command == 'cartan':
            return _cartan(args)

        elif args.command == 'cupsq':
            return _cupsq(args)

        elif args.command == 'verify-paper':
            return print_report(verify_paper())

        elif args.command == 'constants':
            print_constants(args.chi)
            return EXIT_OK

        elif args.command == 'search':
            return _search(args, threads)

        elif args.command == 'check-cert':
            return print_report(check_certificate(read_certificate(args.cert)))

        elif args.command == 'convert':
            return _convert(args)

    except KeyboardInterrupt:
        print("\n\n[WARNING] Operation cancelled by user")
        return EXIT_OK
    except LiteralSyntaxError as e:
        print(f"\n[ERROR] Malformed literal: {e}")
        return EXIT_USAGE
    except (GeometryError, ValueError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"\n[ERROR] Error: {e}")
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"{args.command} failed: {type(e).__name__} - {e}", exc_info=True)
        print(f"\n[ERROR] Error: {e}")
        return EXIT_FAILED
    return EXIT_USAGE


def main():
    """Main CLI entry point"""
    sys.exit(run())


if __name__ == '__main__':
    main()
