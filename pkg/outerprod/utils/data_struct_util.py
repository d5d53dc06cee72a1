"""Helpers for turning domain values into plain JSON data."""

from __future__ import annotations

import json
import math
from enum import Enum
from typing import Any

Primitive = bool | int | float | str | None
SimpleType = dict | list | Primitive
Simple = dict[str, SimpleType] | list[SimpleType] | SimpleType


class DataStructUtil:
  """Conversion of nested values (dataclasses, enums, tuples) to JSON."""

  @classmethod
  def simplify(cls, obj: Any, max_depth: int = 32) -> Simple:
    """Recursively convert ``obj`` to dicts, lists and primitives.

    Objects with ``to_dict`` use it, objects with ``to_json`` (extended reals)
    use that, enums become their values and non-finite floats become the
    strings ``"inf"`` / ``"-inf"``.

    :param obj: The object to convert
    :param max_depth: Recursion limit; deeper values are rendered with ``repr``
    """

    def to_prim(o: Any, depth: int) -> Simple:
      result: Simple

      if depth >= max_depth:
        result = repr(o)
      elif isinstance(o, float) and not math.isfinite(o):
        if math.isnan(o):
          raise ValueError('NaN cannot be serialized')
        result = 'inf' if o > 0 else '-inf'
      elif isinstance(o, Primitive):
        result = o
      elif isinstance(o, Enum):
        result = o.value
      elif isinstance(o, dict):
        result = {str(k): to_prim(v, depth + 1) for k, v in o.items()}
      elif isinstance(o, list | tuple):
        result = [to_prim(item, depth + 1) for item in o]
      elif callable(getattr(o, 'to_dict', None)):
        result = to_prim(o.to_dict(), depth + 1)
      elif callable(getattr(o, 'to_json', None)):
        result = to_prim(o.to_json(), depth + 1)
      elif hasattr(o, 'item'):
        # numpy scalars
        result = to_prim(o.item(), depth + 1)
      else:
        result = repr(o)

      return result

    return to_prim(obj, depth=0)

  @classmethod
  def to_json(cls, obj: Any, indent: int | None = None) -> str:
    """Deterministic JSON: sorted keys, shortest round-trip floats, no NaN."""
    return json.dumps(cls.simplify(obj), indent=indent, sort_keys=True, allow_nan=False)
