"""``python -m outerprod`` and the ``outerprod`` console script."""

import sys

from outerprod.outerprod_cli import OuterProductCLI


def main(argv: list[str] | None = None) -> int:
  """Run the CLI and return its exit code."""
  return OuterProductCLI().run(argv)


if __name__ == '__main__':
  sys.exit(main())
