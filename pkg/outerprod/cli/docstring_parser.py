"""Parse function docstrings to extract parameter descriptions."""

import inspect
import re
from dataclasses import dataclass


@dataclass
class ParamDoc:
  """Holds parameter documentation extracted from docstring."""

  name: str
  description: str


class DocStringParser:
  """Parser for extracting parameter documentation from function docstrings."""

  PARAM_PATTERN = re.compile(r'^:param\s+(\w+):\s*(.+)$')

  @classmethod
  def parse_docstring(cls, docstring: str) -> tuple[str, dict[str, ParamDoc]]:
    """Extract the summary and ``:param name:`` entries from a docstring.

    Continuation lines are appended to the preceding parameter. Other ``:``
    directives (``:raises``, ``:return``) are dropped.

    :param docstring: The docstring text to parse
    :return: Tuple of (main_description, param_docs_dict)
    """
    if not docstring:
      return '', {}

    main_lines: list[str] = []
    param_docs: dict[str, ParamDoc] = {}
    current: ParamDoc | None = None

    for line in (line.strip() for line in docstring.strip().split('\n')):
      match = cls.PARAM_PATTERN.match(line)
      if match:
        name, description = match.groups()
        current = param_docs[name] = ParamDoc(name, description.strip())
      elif line.startswith(':') or not line:
        current = None
      elif current is not None:
        current.description = f'{current.description} {line}'
      else:
        main_lines.append(line)

    return ' '.join(main_lines).strip(), param_docs

  @classmethod
  def extract_function_help(cls, func) -> tuple[str, dict[str, str]]:
    """Extract help information from a function's docstring.

    :param func: Function to extract help from
    :return: Tuple of (main_description, param_help_dict)
    """
    main_desc, param_docs = cls.parse_docstring(inspect.getdoc(func) or '')
    param_help = {param.name: param.description for param in param_docs.values()}
    return main_desc or f'Execute {func.__name__}', param_help
