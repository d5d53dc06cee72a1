"""Build argparse arguments from signatures and docstrings."""

import argparse
import enum
import inspect
from pathlib import Path
from typing import Any, Union, get_args, get_origin

from outerprod.utils.text_util import TextUtil

from .docstring_parser import DocStringParser

GLOBAL_PREFIX = '_global_'


class ArgumentParser:
  """Translate Python parameters into ``--kebab-case`` options."""

  @staticmethod
  def get_arg_type_config(annotation: Any) -> dict[str, Any]:
    """Map a type annotation onto argparse ``type``/``action``/``choices``.

    ``X | None`` unwraps to ``X``; enums are matched by value, so
    ``--mode multiset`` selects ``SpectrumOption.MULTISET``.
    """
    origin = get_origin(annotation)
    if origin is Union or str(origin) == "<class 'types.UnionType'>":
      args = get_args(annotation)
      if len(args) == 2 and type(None) in args:
        annotation = next(arg for arg in args if arg is not type(None))

    result: dict[str, Any] = {}
    if annotation in (str, int, float, Path):
      result = {'type': annotation}
    elif annotation is bool:
      result = {'action': 'store_true'}
    elif inspect.isclass(annotation) and issubclass(annotation, enum.Enum):
      values = [member.value for member in annotation]

      def enum_converter(text: str):
        try:
          return annotation(text)
        except ValueError as e:
          raise argparse.ArgumentTypeError(
            f"invalid choice: '{text}' (choose from {', '.join(values)})"
          ) from e

      enum_converter.__name__ = annotation.__name__
      result = {'type': enum_converter, 'metavar': f'{{{",".join(values)}}}'}
    return result

  @staticmethod
  def _argument_config(
    param: inspect.Parameter, dest: str, help_text: str
  ) -> dict[str, Any]:
    config: dict[str, Any] = {'dest': dest, 'help': help_text}
    if param.annotation is not param.empty:
      config.update(ArgumentParser.get_arg_type_config(param.annotation))
    if 'metavar' not in config and 'action' not in config:
      config['metavar'] = param.name.upper()

    if param.default is not param.empty:
      config['default'] = param.default
      if param.default is not None and 'action' not in config:
        config['help'] = f'{help_text} (default: {getattr(param.default, "value", param.default)})'
    else:
      config['required'] = True
    return config

  @staticmethod
  def add_global_class_args(parser: argparse.ArgumentParser, target_class: type) -> None:
    """Expose the target class constructor parameters as global options."""
    init = target_class.__init__  # type: ignore[misc]
    _, param_help = DocStringParser.extract_function_help(init)

    for name, param in inspect.signature(target_class, eval_str=True).parameters.items():
      if param.kind in (param.VAR_POSITIONAL, param.VAR_KEYWORD):
        continue
      config = ArgumentParser._argument_config(
        param, f'{GLOBAL_PREFIX}{name}', param_help.get(name, f'Global {name} option')
      )
      parser.add_argument(f'--{TextUtil.kebab_case(name)}', **config)

  @staticmethod
  def add_function_args(parser: argparse.ArgumentParser, fn: Any) -> None:
    """Add one option per parameter of ``fn``; parameters without defaults are required."""
    _, param_help = DocStringParser.extract_function_help(fn)

    for name, param in inspect.signature(fn, eval_str=True).parameters.items():
      if name == 'self' or param.kind in (param.VAR_POSITIONAL, param.VAR_KEYWORD):
        continue
      config = ArgumentParser._argument_config(param, name, param_help.get(name, f'{name} option'))
      parser.add_argument(f'--{TextUtil.kebab_case(name)}', **config)
