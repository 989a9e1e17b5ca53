"""Text formats for matrices, representations and quartic parameters.

Skew matrix::

    skew <n> <entry-degree> <field>
    <i> <j> <polynomial>        # 1-based, i < j; omitted entries are zero
    [curve <polynomial>]        # optional, used by ``construct from-B``

Pfaffian representation::

    pfaffrep <2d> <field>
    A0
    <i> <j> <scalar>
    A1
    ...
    A2
    ...
    curve <polynomial>

Determinantal representations use ``detrep <d> <field>`` with blocks
``M0``, ``M1``, ``M2`` listing every nonzero ``<i> <j> <scalar>``.

Quartic parameters: lines ``cij <i> <j> <scalar>`` and optionally
``action <a> <e> <p>``.  Lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from .errors import ParseError
from .field import Field, parse_field
from .poly import Poly, parse_poly
from .quartic import ALL_KEYS, REDUCED_KEYS, GroupElement, QuarticParams, key
from .reps import DeterminantalRep, PfaffianRep, SectionMatrix, linear_matrix
from .skew import SkewPolyMatrix


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {tok!r}") from None


def _scalar(field: Field, tok: str, lineno: int):
    try:
        return field(tok)
    except (ParseError, ZeroDivisionError) as exc:
        raise ParseError(f"line {lineno}: {exc}") from None


# skew matrices -----------------------------------------------------------


def read_skew(text: str, field: Field | None = None):
    """Parse a skew matrix file; returns (SkewPolyMatrix, curve or None)."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty matrix file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "skew":
        raise ParseError(f"line {lineno}: expected 'skew <n> <entry-degree> <field>'")
    n, degree = _int(parts[1], lineno), _int(parts[2], lineno)
    field = field or parse_field(parts[3])
    entries = {}
    curve = None
    for lineno, line in lines[1:]:
        if line.startswith("curve"):
            curve = _poly(line[5:], field, lineno)
            continue
        i, j, expr = _entry(line, lineno)
        if not (1 <= i < j <= n):
            raise ParseError(f"line {lineno}: need 1 <= i < j <= {n}")
        f = _poly(expr, field, lineno)
        if f and f.degree != degree:
            raise ParseError(f"line {lineno}: entry has degree {f.degree}, header says {degree}")
        entries[(i - 1, j - 1)] = Poly(field, f.terms, degree)
    return SkewPolyMatrix(n, field, entries, degree), curve


def _entry(line, lineno):
    parts = line.split(None, 2)
    if len(parts) != 3:
        raise ParseError(f"line {lineno}: expected '<i> <j> <value>'")
    return _int(parts[0], lineno), _int(parts[1], lineno), parts[2]


def _poly(text, field, lineno):
    try:
        return parse_poly(text, field)
    except ParseError as exc:
        raise ParseError(f"line {lineno}: {exc}") from None


def write_skew(S: SkewPolyMatrix, curve: Poly | None = None) -> str:
    out = [f"skew {S.n} {S.degree} {S.field.descriptor}"]
    for (i, j), e in sorted(S.entries.items()):
        out.append(f"{i + 1} {j + 1} {e.fmt()}")
    if curve is not None:
        out.append(f"curve {curve.fmt()}")
    return "\n".join(out) + "\n"


# representations ---------------------------------------------------------


def _read_blocks(text, kind, names, field):
    lines = list(_lines(text))
    if not lines:
        raise ParseError(f"empty {kind} file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) not in (2, 3) or parts[0] != kind:
        raise ParseError(f"line {lineno}: expected '{kind} <size> [<field>]'")
    size = _int(parts[1], lineno)
    if field is None:
        field = parse_field(parts[2]) if len(parts) == 3 else parse_field("QQ")
    blocks = {name: [[field.zero] * size for _ in range(size)] for name in names}
    current = None
    curve = None
    for lineno, line in lines[1:]:
        if line in names:
            current = line
            continue
        if line.startswith("skew "):
            continue  # optional per-block skew header
        if line.startswith("curve"):
            curve = _poly(line[5:], field, lineno)
            continue
        if current is None:
            raise ParseError(f"line {lineno}: entry outside a block")
        i, j, tok = _entry(line, lineno)
        if not (1 <= i <= size and 1 <= j <= size):
            raise ParseError(f"line {lineno}: index out of range")
        blocks[current][i - 1][j - 1] = _scalar(field, tok, lineno)
    if curve is None:
        raise ParseError(f"{kind} file lacks a 'curve' line")
    return size, field, [blocks[n] for n in names], curve


def read_pfaffrep(text: str, field: Field | None = None, verify: bool = True):
    """Parse a pfaffrep file.  With ``verify`` returns a PfaffianRep, else (matrix, curve)."""
    size, field, mats, curve = _read_blocks(text, "pfaffrep", ("A0", "A1", "A2"), field)
    for m in mats:
        for i in range(size):
            if m[i][i]:
                raise ParseError(f"nonzero diagonal entry at ({i + 1},{i + 1})")
            for j in range(i + 1, size):
                upper, lower = m[i][j], m[j][i]
                if not upper:
                    upper = field.norm(-lower)
                elif lower and field.norm(upper + lower):
                    raise ParseError(f"block is not skew at ({i + 1},{j + 1})")
                m[i][j], m[j][i] = upper, field.norm(-upper)
    A = SkewPolyMatrix.pencil(mats, field)
    if verify:
        return PfaffianRep.build(A, curve)
    return A, curve


def write_pfaffrep(A: SkewPolyMatrix, curve: Poly) -> str:
    mats = A.linear_parts()
    out = [f"pfaffrep {A.n} {A.field.descriptor}"]
    for name, m in zip(("A0", "A1", "A2"), mats):
        out.append(name)
        for i in range(A.n):
            for j in range(i + 1, A.n):
                if m[i][j]:
                    out.append(f"{i + 1} {j + 1} {A.field.fmt(m[i][j])}")
    out.append(f"curve {curve.fmt()}")
    return "\n".join(out) + "\n"


def read_detrep(text: str, field: Field | None = None, verify: bool = True):
    size, field, mats, curve = _read_blocks(text, "detrep", ("M0", "M1", "M2"), field)
    M = linear_matrix(field, mats)
    if verify:
        return DeterminantalRep.build(M, curve)
    return M, curve


def write_detrep(M, curve: Poly) -> str:
    field = curve.field
    d = len(M)
    out = [f"detrep {d} {field.descriptor}"]
    for k, name in enumerate(("M0", "M1", "M2")):
        out.append(name)
        for i in range(d):
            for j in range(d):
                c = M[i][j].coefficient(tuple(int(t == k) for t in range(3)))
                if c:
                    out.append(f"{i + 1} {j + 1} {field.fmt(c)}")
    out.append(f"curve {curve.fmt()}")
    return "\n".join(out) + "\n"


def read_section_matrix(text: str, field: Field | None = None) -> SectionMatrix:
    B, curve = read_skew(text, field)
    if curve is None:
        raise ParseError("section matrix file needs a 'curve' line")
    return SectionMatrix(B, curve)


# quartic parameters ------------------------------------------------------


def read_params(text: str, field: Field):
    """Returns (QuarticParams, GroupElement or None); mode inferred from the keys."""
    values = {}
    action = None
    for lineno, line in _lines(text):
        parts = line.split()
        if parts[0] == "cij":
            if len(parts) != 4:
                raise ParseError(f"line {lineno}: expected 'cij <i> <j> <scalar>'")
            i, j = _int(parts[1], lineno), _int(parts[2], lineno)
            if not (1 <= i < j <= 8):
                raise ParseError(f"line {lineno}: need 1 <= i < j <= 8")
            values[key(i, j)] = _scalar(field, parts[3], lineno)
        elif parts[0] == "action":
            if len(parts) != 4:
                raise ParseError(f"line {lineno}: expected 'action <a> <e> <p>'")
            action = GroupElement(*(_scalar(field, t, lineno) for t in parts[1:]))
        else:
            raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
    mode = "full" if set(values) - set(REDUCED_KEYS) else "reduced"
    if mode == "full" and set(values) != set(ALL_KEYS):
        # full mode may omit zeros
        values = {k: values.get(k, field.zero) for k in ALL_KEYS}
    return QuarticParams(values, mode, field), action


def write_params(params: QuarticParams, action: GroupElement | None = None) -> str:
    f = params.field
    out = [f"cij {k[1]} {k[2]} {f.fmt(v)}" for k, v in params.values.items()]
    if action is not None:
        out.append(f"action {f.fmt(f(action.a))} {f.fmt(f(action.e))} {f.fmt(f(action.p))}")
    return "\n".join(out) + "\n"
