import json
import re
from pathlib import Path
from typing import Optional, Tuple, Union

from pydantic import ValidationError

from poincareseries.config import get_config
from poincareseries.core import CFConvention, LexVal, QuadVal, RationalVal, parse_value
from poincareseries.core.encoding import parse_rational
from poincareseries.errors import ParseError, QsPiecesConflict, UnknownKey
from poincareseries.semigroup import Box, Scalar, TruncationBound, ValuationSpec, derive_qs, validate_spec

from cli.models import SpecDocument

SPEC_KEYS = frozenset(SpecDocument.model_fields)


def parse_spec_text(text: str) -> SpecDocument:
    """Parse the JSON text of a spec file; see :func:`parse_spec_file`."""
    try:
        raw = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    except ValueError as e:
        raise ParseError(str(e)) from None
    if not isinstance(raw, dict):
        raise ParseError("a spec file holds one JSON object", 1, 1)

    unknown = sorted(set(raw) - SPEC_KEYS)
    if unknown:
        raise UnknownKey(f"unknown key(s): {', '.join(unknown)}")

    try:
        doc = SpecDocument.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ParseError(f"{location}: {first['msg']}", *_locate_key(text, first["loc"])) from None

    if doc.pieces is not None:
        conv = CFConvention(doc.cf_convention.value if doc.cf_convention else get_config()["cf_convention"])
        derived = derive_qs(doc.pieces, conv)
        if doc.qs is None:
            doc = doc.model_copy(update={"qs": derived})
        elif list(doc.qs) != derived:
            raise QsPiecesConflict(f"qs {doc.qs} disagree with pieces, which give {derived}")
    return doc


def parse_spec_file(path: Union[str, Path]) -> SpecDocument:
    """
    Read a spec file.

    Args:
        path: JSON document with the SpecDocument keys

    Returns:
        The parsed document, with qs derived from pieces when qs is absent

    Raises:
        ParseError: malformed JSON (with line/column) or wrong field types
        UnknownKey: keys outside the schema
        QsPiecesConflict: qs given alongside pieces that simplify differently
    """
    return parse_spec_text(Path(path).read_text(encoding="utf-8"))


def emit_spec_document(doc: SpecDocument) -> str:
    """Deterministic JSON for a spec document."""
    data = doc.model_dump(mode="json", exclude_none=True)
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def spec_from_document(doc: SpecDocument) -> ValuationSpec:
    return validate_spec(doc.model_dump(mode="json", exclude_none=True))


def parse_bound(text: str, spec: ValuationSpec) -> TruncationBound:
    """``--bound`` in the spec's value group: "12", "2+0*tau", or "(2,2)" for a box."""
    text = text.strip()
    if spec.kind is LexVal:
        value = parse_value(text)
        if not isinstance(value, LexVal):
            raise ValueError(f"Z^2 specs take a box bound like (2,2), got {text!r}")
        return Box(value.first, value.second)
    if spec.kind is QuadVal and "tau" not in text:
        return Scalar(QuadVal(parse_rational(text), 0))
    value = parse_value(text)
    if not isinstance(value, (RationalVal, QuadVal)) or not isinstance(value, spec.kind):
        raise ValueError(f"bound {text!r} is not in the spec's value group")
    return Scalar(value)


def _locate_key(text: str, loc) -> Tuple[Optional[int], Optional[int]]:
    """1-based line and column of the top-level key named in a pydantic error location."""
    if not loc:
        return None, None
    match = re.search(r'"' + re.escape(str(loc[0])) + r'"\s*:', text)
    if match is None:
        return None, None
    line = text.count("\n", 0, match.start()) + 1
    column = match.start() - (text.rfind("\n", 0, match.start()) + 1) + 1
    return line, column


def _reject_float(text: str):
    raise ValueError(f"float literal {text} not allowed; use a decimal string")
