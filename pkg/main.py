import logging
import sys
from typing import List, Optional, TextIO

from cli.commands import COMMANDS, EXIT_FAILED, EXIT_USAGE, UsageError
from cli.parser import build_parser
from core.config import load_environment
from core.errors import BchlabError, ConfigError, ParseError
from lattice.grid import SeedFormatError
from lattice.matrix_io import MatrixFormatError

logger = logging.getLogger("bchlab")

INPUT_ERRORS = (UsageError, ParseError, MatrixFormatError, SeedFormatError, ConfigError)


def main(argv: Optional[List[str]] = None, out: TextIO = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = load_environment()
    except ConfigError as e:
        logging.basicConfig(level=logging.ERROR, format='%(asctime)s - %(levelname)s - %(message)s',
                            stream=sys.stderr)
        logger.error(f"Configuration error: {e}")
        return EXIT_USAGE

    logging.basicConfig(level=getattr(logging, settings.log_level),
                        format='%(asctime)s - %(levelname)s - %(message)s', stream=sys.stderr)

    try:
        return COMMANDS[args.command](args, settings, out)
    except INPUT_ERRORS as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE
    except BchlabError as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
