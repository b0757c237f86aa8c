"""Script DSL: ring/ideal/module declarations, checks, and asserts.

One statement per ';' (newlines are whitespace, '#' starts a comment):

    ring R = poly(field=32003, vars=[x0..x3]);
    option seed = 7;                    # also: degree_cap, field, window
    ideal I = (x0*x2, x0*x3);
    ideal K = intersect(I, (x2, x3));   # also: sum, random_ci([2,1], seed=5)
    module M = quotient(I);             # also: module, syzygy, free, tensor_r,
                                        #   saturate, sections, dual, direct_sum
    check very_proper(M, N);
    assert deg(tensor_r(M, N)) == 3;

A script declares exactly one ring, and every name is bound before it
is used.  Check statements record full reports without gating; the run
passes iff every assert holds.  Pretty-printing a parsed script
reparses to an equal AST, which keeps stored corpus reports stable.
"""

import dataclasses
import hashlib
import re
import time
from dataclasses import dataclass

from . import criteria
from .errors import GintError, ParseError
from .fields import QQ, Field
from .modalg import (
    direct_sum,
    dual,
    ext_module,
    free_presentation,
    ideal_submodule,
    intersect_ideals,
    is_saturated,
    iso_compare,
    module_of_ideal,
    quotient_module,
    random_complete_intersection,
    saturate,
    sections_h0,
    sum_ideals,
    syzygy_module,
    tensor_over_ring,
)
from .parser import parse_poly
from .ring import PolyRing

SCHEMA_VERSION = 1

DEFAULT_WINDOW = (-5, 5)


# -- AST -------------------------------------------------------------------------------


@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class PolyArg:
    text: str


@dataclass(frozen=True)
class Mode:
    name: str


@dataclass(frozen=True)
class Degrees:
    values: tuple


@dataclass(frozen=True)
class Seed:
    value: int


@dataclass(frozen=True)
class Group:
    polys: tuple


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple


@dataclass(frozen=True)
class RingDecl:
    name: str
    field: int | None  # None means the rationals
    variables: tuple


@dataclass(frozen=True)
class OptionDecl:
    name: str
    value: object


@dataclass(frozen=True)
class IdealDecl:
    name: str
    expr: object  # Group or Call


@dataclass(frozen=True)
class ModuleDecl:
    name: str
    expr: Call


@dataclass(frozen=True)
class CheckStmt:
    name: str
    args: tuple


@dataclass(frozen=True)
class AssertStmt:
    expr: Call
    op: str
    value: object  # int or bool


@dataclass(frozen=True)
class Script:
    statements: tuple


def _atom_text(a) -> str:
    if isinstance(a, Ref):
        return a.name
    if isinstance(a, Num):
        return str(a.value)
    if isinstance(a, PolyArg):
        return a.text
    if isinstance(a, Mode):
        return a.name
    if isinstance(a, Degrees):
        return "[" + ", ".join(str(v) for v in a.values) + "]"
    if isinstance(a, Seed):
        return f"seed={a.value}"
    if isinstance(a, Group):
        return "(" + ", ".join(a.polys) + ")"
    if isinstance(a, Call):
        return f"{a.fn}(" + ", ".join(_atom_text(x) for x in a.args) + ")"
    raise GintError(f"unprintable argument {a!r}")


def _vars_text(names: tuple) -> str:
    if len(names) >= 2:
        m = re.fullmatch(r"(.*?)(\d+)", names[0])
        if m:
            prefix, lo = m.group(1), int(m.group(2))
            run = tuple(f"{prefix}{lo + k}" for k in range(len(names)))
            if run == names:
                return f"[{names[0]}..{names[-1]}]"
    return "[" + ", ".join(names) + "]"


def statement_text(s) -> str:
    if isinstance(s, RingDecl):
        f = "QQ" if s.field is None else str(s.field)
        return f"ring {s.name} = poly(field={f}, vars={_vars_text(s.variables)})"
    if isinstance(s, OptionDecl):
        if isinstance(s.value, tuple):
            v = "[" + ", ".join(str(x) for x in s.value) + "]"
        else:
            v = str(s.value)
        return f"option {s.name} = {v}"
    if isinstance(s, IdealDecl):
        return f"ideal {s.name} = {_atom_text(s.expr)}"
    if isinstance(s, ModuleDecl):
        return f"module {s.name} = {_atom_text(s.expr)}"
    if isinstance(s, CheckStmt):
        return f"check {s.name}(" + ", ".join(_atom_text(a) for a in s.args) + ")"
    if isinstance(s, AssertStmt):
        if isinstance(s.value, bool):
            v = "true" if s.value else "false"
        else:
            v = str(s.value)
        return f"assert {_atom_text(s.expr)} {s.op} {v}"
    raise GintError(f"unprintable statement {s!r}")


def script_text(script: Script) -> str:
    return "".join(statement_text(s) + ";\n" for s in script.statements)


# -- signatures --------------------------------------------------------------------------

IDEAL_FNS = {"intersect": ("ideal", "ideal"), "sum": ("ideal", "ideal")}

MODULE_FNS = {
    "quotient": ("ideal",),
    "module": ("ideal",),
    "syzygy": ("ideal", "int"),
    "free": None,  # any number of integer twists
    "tensor_r": ("mod", "mod"),
    "direct_sum": ("mod", "mod"),
    "saturate": ("mod",),
    "sections": ("mod",),
    "dual": ("mod",),
}

CHECK_SIGS = {
    "proper": ("mod", "mod"),
    "very_proper": ("mod", "mod"),
    "unmixed": ("mod",),
    "bezout": ("mod", "mod"),
    "depth_formula": ("mod", "mod"),
    "cm_lifting": ("mod", "mod"),
    "type_product": ("mod", "mod"),
    "kunneth": ("mod", "mod"),
    "betti_join": ("mod", "mod"),
    "hyperplane_lift": ("mod", "poly"),
    "degree_section": ("mod", "poly"),
}

NUM_ASSERTS = {
    "deg": ("mod",),
    "dim": ("mod",),
    "depth": ("mod",),
    "pd": ("mod",),
    "type": ("mod",),
    "ext_dim": ("mod", "int"),
    "hf": ("mod", "int"),
}

BOOL_ASSERTS = {
    "cm": ("mod",),
    "unmixed": ("mod",),
    "torsion_free": ("mod",),
    "reflexive": ("mod",),
    "maximal": ("mod",),
    "free": ("mod",),
    "saturated": ("mod",),
    "equal": ("mod", "mod"),
    "proper": ("mod", "mod"),
    "very_proper": ("mod", "mod"),
    "bezout": ("mod", "mod"),
    "depth_formula": ("mod", "mod"),
    "cm_lifting": ("mod", "mod"),
    "type_product": ("mod", "mod"),
    "kunneth": ("mod", "mod"),
    "betti_join": ("mod", "mod"),
}

OPTION_NAMES = ("seed", "degree_cap", "field", "window")

_CMP_OPS = ("==", "!=", "<=", ">=", "<", ">")


# -- parsing -----------------------------------------------------------------------------


def _squash(s: str) -> str:
    return " ".join(s.split())


def _split_top(s: str):
    """Split on commas outside parentheses and brackets."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {s!r}")
        elif ch == "," and depth == 0:
            parts.append(s[start:i])
            start = i + 1
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {s!r}")
    parts.append(s[start:])
    return [p.strip() for p in parts]


def _statements_with_lines(text: str):
    """Split on ';' outside comments, tracking the line of each statement."""
    no_comments = []
    for ln in text.split("\n"):
        hash_at = ln.find("#")
        no_comments.append(ln if hash_at < 0 else ln[:hash_at])
    src = "\n".join(no_comments)
    out, start = [], 0
    while True:
        i = src.find(";", start)
        if i < 0:
            break
        chunk = src[start:i]
        if chunk.strip():
            lead = len(chunk) - len(chunk.lstrip())
            out.append((chunk, src.count("\n", 0, start + lead) + 1))
        start = i + 1
    if src[start:].strip():
        raise ParseError(
            "missing ';' after the last statement",
            line=src.count("\n", 0, start) + 1,
        )
    return out


def _parse_int(tok: str, line: int) -> int:
    if re.fullmatch(r"-?\d+", tok):
        return int(tok)
    raise ParseError(f"expected an integer, got {tok!r}", line=line)


def _parse_ideal_arg(tok: str, line: int):
    if re.fullmatch(r"\w+", tok):
        return Ref(tok)
    if tok.startswith("(") and tok.endswith(")"):
        polys = tuple(_squash(p) for p in _split_top(tok[1:-1]))
        if not all(polys):
            raise ParseError("empty generator in ideal literal", line=line)
        return Group(polys)
    raise ParseError(f"expected an ideal name or (generators), got {tok!r}", line=line)


def _parse_call(tok: str, line: int):
    m = re.fullmatch(r"(\w+)\((.*)\)", tok, re.S)
    if not m:
        raise ParseError(f"expected a function call, got {tok!r}", line=line)
    return m.group(1), _split_top(m.group(2)) if m.group(2).strip() else []


def _parse_module_expr(tok: str, line: int) -> Call:
    fn, raw = _parse_call(tok, line)
    if fn not in MODULE_FNS:
        raise ParseError(f"unknown module function {fn!r}", line=line)
    if fn == "free":
        if not raw:
            raise ParseError("free() needs at least one twist", line=line)
        return Call(fn, tuple(Num(_parse_int(a, line)) for a in raw))
    sig = MODULE_FNS[fn]
    if len(raw) != len(sig):
        raise ParseError(f"{fn}() takes {len(sig)} arguments", line=line)
    args = []
    for kind, a in zip(sig, raw):
        if kind == "ideal":
            args.append(_parse_ideal_arg(a, line))
        elif kind == "int":
            args.append(Num(_parse_int(a, line)))
        else:
            args.append(_parse_mod_arg(a, line))
    return Call(fn, tuple(args))


def _parse_mod_arg(tok: str, line: int):
    if re.fullmatch(r"\w+", tok):
        return Ref(tok)
    return _parse_module_expr(tok, line)


def _parse_sig_args(fn: str, sig: tuple, raw: list, line: int) -> tuple:
    if len(raw) != len(sig):
        raise ParseError(f"{fn}() takes {len(sig)} arguments", line=line)
    args = []
    for kind, a in zip(sig, raw):
        if kind == "mod":
            args.append(_parse_mod_arg(a, line))
        elif kind == "int":
            args.append(Num(_parse_int(a, line)))
        elif kind == "poly":
            args.append(PolyArg(_squash(a)))
        elif kind == "mode":
            if not re.fullmatch(r"\w+", a):
                raise ParseError(f"expected a mode keyword, got {a!r}", line=line)
            args.append(Mode(a))
        else:  # pragma: no cover - signatures are static
            raise ParseError(f"bad signature entry {kind!r}", line=line)
    return tuple(args)


def _parse_ring(body: str, line: int) -> RingDecl:
    m = re.fullmatch(r"ring\s+(\w+)\s*=\s*poly\((.*)\)", body, re.S)
    if not m:
        raise ParseError("expected: ring R = poly(field=..., vars=[...])", line=line)
    name = m.group(1)
    field = None
    variables = None
    for part in _split_top(m.group(2)):
        km = re.fullmatch(r"(\w+)\s*=\s*(.*)", part, re.S)
        if not km:
            raise ParseError(f"expected key=value in poly(...), got {part!r}", line=line)
        key, val = km.group(1), km.group(2).strip()
        if key == "field":
            field = None if val == "QQ" else _parse_int(val, line)
        elif key == "vars":
            if not (val.startswith("[") and val.endswith("]")):
                raise ParseError("vars must be a [..] list", line=line)
            inner = val[1:-1].strip()
            rng = re.fullmatch(r"(\w*?)(\d+)\s*\.\.\s*(\w*?)(\d+)", inner)
            if rng:
                p1, lo, p2, hi = rng.groups()
                if p1 != p2 or int(lo) > int(hi):
                    raise ParseError(f"bad variable range {inner!r}", line=line)
                variables = tuple(f"{p1}{k}" for k in range(int(lo), int(hi) + 1))
            else:
                variables = tuple(v.strip() for v in inner.split(","))
                if not all(re.fullmatch(r"\w+", v) for v in variables):
                    raise ParseError(f"bad variable list {inner!r}", line=line)
        else:
            raise ParseError(f"unknown poly(...) key {key!r}", line=line)
    if variables is None:
        raise ParseError("ring declaration needs vars=[...]", line=line)
    if field is not None and field < 2:
        raise ParseError("field must be a prime or QQ", line=line)
    return RingDecl(name, field, variables)


def _parse_statement(body: str, line: int):
    body = body.strip()
    keyword = body.split(None, 1)[0] if body else ""
    if keyword == "ring":
        return _parse_ring(body, line)
    if keyword == "option":
        m = re.fullmatch(r"option\s+(\w+)\s*=\s*(.*)", body, re.S)
        if not m:
            raise ParseError("expected: option name = value", line=line)
        name, val = m.group(1), m.group(2).strip()
        if name not in OPTION_NAMES:
            raise ParseError(f"unknown option {name!r}", line=line)
        if name == "window":
            wm = re.fullmatch(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]", val)
            if not wm:
                raise ParseError("window must be [lo, hi]", line=line)
            value = (int(wm.group(1)), int(wm.group(2)))
        elif name == "field" and val == "QQ":
            value = "QQ"
        else:
            value = _parse_int(val, line)
        return OptionDecl(name, value)
    if keyword == "ideal":
        m = re.fullmatch(r"ideal\s+(\w+)\s*=\s*(.*)", body, re.S)
        if not m:
            raise ParseError("expected: ideal I = ...", line=line)
        name, rest = m.group(1), m.group(2).strip()
        if rest.startswith("("):
            return IdealDecl(name, _parse_ideal_arg(rest, line))
        fn, raw = _parse_call(rest, line)
        if fn == "random_ci":
            if not raw or not (raw[0].startswith("[") and raw[0].endswith("]")):
                raise ParseError("random_ci needs a [degrees] list", line=line)
            degs = tuple(_parse_int(d, line) for d in _split_top(raw[0][1:-1]))
            args = [Degrees(degs)]
            if len(raw) == 2:
                sm = re.fullmatch(r"seed\s*=\s*(-?\d+)", raw[1])
                if not sm:
                    raise ParseError("expected seed=N in random_ci", line=line)
                args.append(Seed(int(sm.group(1))))
            elif len(raw) > 2:
                raise ParseError("random_ci takes [degrees] and optional seed", line=line)
            return IdealDecl(name, Call(fn, tuple(args)))
        if fn not in IDEAL_FNS:
            raise ParseError(f"unknown ideal function {fn!r}", line=line)
        sig = IDEAL_FNS[fn]
        if len(raw) != len(sig):
            raise ParseError(f"{fn}() takes {len(sig)} arguments", line=line)
        return IdealDecl(name, Call(fn, tuple(_parse_ideal_arg(a, line) for a in raw)))
    if keyword == "module":
        m = re.fullmatch(r"module\s+(\w+)\s*=\s*(.*)", body, re.S)
        if not m:
            raise ParseError("expected: module M = fn(...)", line=line)
        return ModuleDecl(m.group(1), _parse_module_expr(m.group(2).strip(), line))
    if keyword == "check":
        m = re.fullmatch(r"check\s+(\w+)\((.*)\)", body, re.S)
        if not m:
            raise ParseError("expected: check name(args)", line=line)
        name = m.group(1)
        raw = _split_top(m.group(2)) if m.group(2).strip() else []
        if name == "splitting":
            if len(raw) == 2:
                sig = ("mod", "mode")
            elif len(raw) == 3:
                sig = ("mod", "mode", "mod")
            else:
                raise ParseError("splitting takes 2 or 3 arguments", line=line)
            return CheckStmt(name, _parse_sig_args(name, sig, raw, line))
        if name not in CHECK_SIGS:
            raise ParseError(f"unknown check {name!r}", line=line)
        return CheckStmt(name, _parse_sig_args(name, CHECK_SIGS[name], raw, line))
    if keyword == "assert":
        rest = body[len("assert"):].strip()
        depth = 0
        split_at = None
        for i, ch in enumerate(rest):
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            elif depth == 0:
                two = rest[i : i + 2]
                if two in ("==", "!=", "<=", ">="):
                    split_at = (i, two)
                    break
                if ch in "<>":
                    split_at = (i, ch)
                    break
        if split_at is None:
            raise ParseError("assert needs a comparison", line=line)
        i, op = split_at
        left, right = rest[:i].strip(), rest[i + len(op):].strip()
        fn, raw = _parse_call(left, line)
        if fn in NUM_ASSERTS:
            expr = Call(fn, _parse_sig_args(fn, NUM_ASSERTS[fn], raw, line))
            value = _parse_int(right, line)
        elif fn in BOOL_ASSERTS or fn == "splitting":
            if fn == "splitting":
                if len(raw) == 2:
                    sig = ("mod", "mode")
                elif len(raw) == 3:
                    sig = ("mod", "mode", "mod")
                else:
                    raise ParseError("splitting takes 2 or 3 arguments", line=line)
            else:
                sig = BOOL_ASSERTS[fn]
            expr = Call(fn, _parse_sig_args(fn, sig, raw, line))
            if right not in ("true", "false") or op not in ("==", "!="):
                raise ParseError(
                    f"{fn}() is a predicate: compare with == or != to true/false",
                    line=line,
                )
            value = right == "true"
        else:
            raise ParseError(f"unknown assert function {fn!r}", line=line)
        return AssertStmt(expr, op, value)
    raise ParseError(f"unknown statement keyword {keyword!r}", line=line)


def _expr_refs(a):
    if isinstance(a, Ref):
        yield a.name
    elif isinstance(a, Call):
        for x in a.args:
            yield from _expr_refs(x)


def _validate(statements, lines):
    ring_seen = False
    ideals, modules = set(), set()
    for s, line in zip(statements, lines):
        if isinstance(s, RingDecl):
            if ring_seen:
                raise ParseError("only one ring declaration per script", line=line)
            ring_seen = True
        elif isinstance(s, IdealDecl):
            for r in _expr_refs(s.expr):
                if r not in ideals:
                    raise ParseError(f"undefined ideal {r!r}", line=line)
            ideals.add(s.name)
        elif isinstance(s, ModuleDecl):
            _check_refs(s.expr, ideals, modules, line)
            modules.add(s.name)
        elif isinstance(s, (CheckStmt, AssertStmt)):
            args = s.args if isinstance(s, CheckStmt) else s.expr.args
            for a in args:
                _check_refs(a, ideals, modules, line)


def _check_refs(a, ideals, modules, line):
    """Module-expression references resolve against the right namespace."""
    if isinstance(a, Ref):
        if a.name not in modules:
            raise ParseError(f"undefined module {a.name!r}", line=line)
    elif isinstance(a, Call):
        sig = MODULE_FNS.get(a.fn)
        kinds = sig if sig is not None else ("int",) * len(a.args)
        for kind, x in zip(kinds, a.args):
            if kind == "ideal":
                if isinstance(x, Ref) and x.name not in ideals:
                    raise ParseError(f"undefined ideal {x.name!r}", line=line)
            else:
                _check_refs(x, ideals, modules, line)


def parse_script(text: str) -> Script:
    pieces = _statements_with_lines(text)
    statements = [_parse_statement(body, line) for body, line in pieces]
    _validate(statements, [line for _, line in pieces])
    return Script(tuple(statements))


# -- execution --------------------------------------------------------------------------


@dataclass
class RunReport:
    script: str
    sha256: str
    seed: int | None
    statements: tuple
    overall: str
    # wall-clock seconds; kept out of the JSON payload so reports stay
    # byte-identical across runs
    elapsed: float | None = None

    @property
    def ok(self) -> bool:
        return self.overall == "pass"

    def to_json_dict(self) -> dict:
        asserts = [e for e in self.statements if e["kind"] == "assert"]
        return {
            "schema_version": SCHEMA_VERSION,
            "script": self.script,
            "sha256": self.sha256,
            "seed": self.seed,
            "statements": list(self.statements),
            "counts": {
                "checks": sum(1 for e in self.statements if e["kind"] == "check"),
                "asserts": len(asserts),
                "failed_asserts": sum(
                    1 for e in asserts if e["conclusion"] != "pass"
                ),
            },
            "overall": self.overall,
        }


class _Executor:
    def __init__(self, seed=None, field_override=None):
        self.cli_seed = seed
        self.field_override = field_override
        self.ring = None
        self.ideals = {}
        self.modules = {}
        self.options = {}
        self.entries = []
        self._mod_cache = {}

    # bindings ------------------------------------------------------------------

    def _field(self, decl_field):
        eff = self.field_override
        if eff is None:
            eff = self.options.get("field", decl_field)
        if eff is None or eff == "QQ":
            return QQ
        return Field(int(eff))

    def exec_ring(self, s: RingDecl):
        if self.ring is not None:
            raise GintError("only one ring declaration per script")
        self.ring = PolyRing(self._field(s.field), s.variables)

    def _need_ring(self) -> PolyRing:
        if self.ring is None:
            raise GintError("no ring declared yet")
        return self.ring

    def _seed_for(self, explicit):
        if explicit is not None:
            return explicit
        if "seed" in self.options:
            return self.options["seed"]
        if self.cli_seed is not None:
            return self.cli_seed
        raise GintError(
            "randomized statement needs a seed (script option or --seed)"
        )

    def eval_ideal(self, a):
        ring = self._need_ring()
        if isinstance(a, Ref):
            if a.name not in self.ideals:
                raise GintError(f"undefined ideal {a.name!r}")
            return self.ideals[a.name]
        if isinstance(a, Group):
            return ideal_submodule(ring, [parse_poly(p, ring) for p in a.polys])
        if isinstance(a, Call):
            if a.fn == "intersect":
                return intersect_ideals(*(self.eval_ideal(x) for x in a.args))
            if a.fn == "sum":
                return sum_ideals(*(self.eval_ideal(x) for x in a.args))
            if a.fn == "random_ci":
                degrees = list(a.args[0].values)
                explicit = a.args[1].value if len(a.args) > 1 else None
                seed = self._seed_for(explicit)
                polys = random_complete_intersection(ring, degrees, seed=seed)
                return ideal_submodule(ring, polys)
        raise GintError(f"cannot evaluate ideal expression {a!r}")

    def eval_module(self, a):
        if isinstance(a, Ref):
            if a.name not in self.modules:
                raise GintError(f"undefined module {a.name!r}")
            return self.modules[a.name]
        if a in self._mod_cache:
            return self._mod_cache[a]
        if not isinstance(a, Call):
            raise GintError(f"cannot evaluate module expression {a!r}")
        fn, args = a.fn, a.args
        if fn == "quotient":
            out = quotient_module(self.eval_ideal(args[0]))
        elif fn == "module":
            out = module_of_ideal(self.eval_ideal(args[0]))
        elif fn == "syzygy":
            out = syzygy_module(self.eval_ideal(args[0]), args[1].value)
        elif fn == "free":
            twists = tuple(x.value for x in args)
            out = free_presentation(self._need_ring(), twists)
        elif fn == "tensor_r":
            out = tensor_over_ring(self.eval_module(args[0]), self.eval_module(args[1]))
        elif fn == "direct_sum":
            out = direct_sum(self.eval_module(args[0]), self.eval_module(args[1]))
        elif fn == "saturate":
            out = saturate(self.eval_module(args[0]))
        elif fn == "sections":
            out = sections_h0(self.eval_module(args[0]))
        elif fn == "dual":
            out = dual(self.eval_module(args[0]))
        else:
            raise GintError(f"unknown module function {fn!r}")
        self._mod_cache[a] = out
        return out

    # checks and asserts ---------------------------------------------------------

    def _window(self):
        lo, hi = self.options.get("window", DEFAULT_WINDOW)
        return range(lo, hi + 1)

    def run_check(self, s: CheckStmt):
        args = s.args
        if s.name == "proper":
            rep = criteria.intersects_properly(
                self.eval_module(args[0]), self.eval_module(args[1])
            )
        elif s.name == "very_proper":
            rep = criteria.intersects_very_properly(
                self.eval_module(args[0]), self.eval_module(args[1])
            )
        elif s.name == "unmixed":
            rep = criteria.is_unmixed(self.eval_module(args[0]))
        elif s.name == "bezout":
            rep = criteria.bezout_check(
                self.eval_module(args[0]), self.eval_module(args[1])
            )
        elif s.name == "depth_formula":
            rep = criteria.depth_formula_check(
                self.eval_module(args[0]), self.eval_module(args[1])
            )
        elif s.name == "cm_lifting":
            rep = criteria.cm_lifting_check(
                self.eval_module(args[0]), self.eval_module(args[1])
            )
        elif s.name == "type_product":
            rep = criteria.type_product_check(
                self.eval_module(args[0]), self.eval_module(args[1])
            )
        elif s.name == "kunneth":
            rep = criteria.kunneth_check(
                self.eval_module(args[0]), self.eval_module(args[1]), self._window()
            )
        elif s.name == "betti_join":
            rep = criteria.betti_join_check(
                self.eval_module(args[0]), self.eval_module(args[1])
            )
        elif s.name == "hyperplane_lift":
            ring = self._need_ring()
            rep = criteria.hyperplane_lift_check(
                self.eval_module(args[0]), parse_poly(args[1].text, ring)
            )
        elif s.name == "degree_section":
            ring = self._need_ring()
            rep = criteria.degree_hypersurface_check(
                self.eval_module(args[0]), parse_poly(args[1].text, ring)
            )
        elif s.name == "splitting":
            other = self.eval_module(args[2]) if len(args) == 3 else None
            rep = criteria.splitting_check(
                self.eval_module(args[0]), args[1].name, other
            )
        else:
            raise GintError(f"unknown check {s.name!r}")
        # report the script-level names instead of structural descriptions
        rep = dataclasses.replace(rep, inputs=tuple(_atom_text(a) for a in s.args))
        entry = {"kind": "check", "statement": statement_text(s)}
        entry.update(rep.to_json_dict())
        self.entries.append(entry)

    def eval_assert(self, s: AssertStmt):
        fn, args = s.expr.fn, s.expr.args
        mods = [
            self.eval_module(a) for a in args if not isinstance(a, (Num, Mode))
        ]
        ints = [a.value for a in args if isinstance(a, Num)]
        if fn in NUM_ASSERTS:
            observed = self._numeric(fn, mods, ints)
        elif fn == "splitting":
            mode = next(a.name for a in args if isinstance(a, Mode))
            other = mods[1] if len(mods) == 2 else None
            observed = criteria.splitting_check(mods[0], mode, other).ok
        else:
            observed = self._boolean(fn, mods)
        holds = {
            "==": observed == s.value,
            "!=": observed != s.value,
            "<=": observed <= s.value,
            ">=": observed >= s.value,
            "<": observed < s.value,
            ">": observed > s.value,
        }[s.op]
        self.entries.append(
            {
                "kind": "assert",
                "statement": statement_text(s),
                "observed": observed,
                "expected": s.value,
                "op": s.op,
                "conclusion": "pass" if holds else "fail",
            }
        )

    def _numeric(self, fn, mods, ints):
        m = mods[0]
        if fn == "deg":
            return m.degree()
        if fn == "dim":
            return m.dim()
        if fn == "depth":
            return m.depth()
        if fn == "pd":
            return m.minimize().pd()
        if fn == "type":
            return criteria.cm_type(m)
        if fn == "ext_dim":
            e = ext_module(m, ints[0])
            return -1 if e.is_zero() else e.dim()
        if fn == "hf":
            return m.hilbert_function(ints[0])
        raise GintError(f"unknown numeric function {fn!r}")

    def _boolean(self, fn, mods):
        m = mods[0]
        if fn == "cm":
            return criteria.is_cohen_macaulay(m)
        if fn == "unmixed":
            return criteria.module_is_unmixed(m)
        if fn == "torsion_free":
            return criteria.maximal_module_flags(m).is_torsion_free
        if fn == "reflexive":
            return criteria.maximal_module_flags(m).is_reflexive
        if fn == "maximal":
            return criteria.maximal_module_flags(m).is_maximal
        if fn == "free":
            return m.minimize().pd() == 0
        if fn == "saturated":
            return is_saturated(m)
        if fn == "equal":
            return iso_compare(m, mods[1]) == "equal"
        if fn == "proper":
            return criteria.intersects_properly(m, mods[1]).ok
        if fn == "very_proper":
            return criteria.intersects_very_properly(m, mods[1]).ok
        if fn == "bezout":
            return criteria.bezout_check(m, mods[1]).ok
        if fn == "depth_formula":
            return criteria.depth_formula_check(m, mods[1]).ok
        if fn == "cm_lifting":
            return criteria.cm_lifting_check(m, mods[1]).ok
        if fn == "type_product":
            return criteria.type_product_check(m, mods[1]).ok
        if fn == "kunneth":
            return criteria.kunneth_check(m, mods[1], self._window()).ok
        if fn == "betti_join":
            return criteria.betti_join_check(m, mods[1]).ok
        raise GintError(f"unknown predicate {fn!r}")


def run_script(
    text: str,
    name: str = "<script>",
    seed: int | None = None,
    field: int | str | None = None,
) -> RunReport:
    """Parse and execute a script; errors carry the statement context."""
    started = time.perf_counter()
    script = parse_script(text)
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    ex = _Executor(seed=seed, field_override=field)
    for s in script.statements:
        if isinstance(s, OptionDecl):
            if s.name in ex.options:
                raise GintError(f"duplicate option {s.name!r}")
            ex.options[s.name] = s.value
    for s in script.statements:
        try:
            if isinstance(s, RingDecl):
                ex.exec_ring(s)
            elif isinstance(s, IdealDecl):
                ex.ideals[s.name] = ex.eval_ideal(s.expr)
            elif isinstance(s, ModuleDecl):
                ex.modules[s.name] = ex.eval_module(s.expr)
            elif isinstance(s, CheckStmt):
                ex.run_check(s)
            elif isinstance(s, AssertStmt):
                ex.eval_assert(s)
        except GintError as e:
            msg = e.args[0] if e.args else str(e)
            e.args = (f"{msg} [in: {statement_text(s)}]",) + tuple(e.args[1:])
            raise
    overall = "pass" if all(
        e["conclusion"] == "pass" for e in ex.entries if e["kind"] == "assert"
    ) else "fail"
    return RunReport(
        script=name,
        sha256=digest,
        seed=seed if seed is not None else ex.options.get("seed"),
        statements=tuple(ex.entries),
        overall=overall,
        elapsed=time.perf_counter() - started,
    )


def collect_modules(
    text: str,
    seed: int | None = None,
    field: int | str | None = None,
) -> dict:
    """Execute only the declarations of a script and return its module bindings.

    Checks and asserts are skipped, so this is the cheap way to get at a
    script's named modules (e.g. to dump invariants for one of them).
    """
    script = parse_script(text)
    ex = _Executor(seed=seed, field_override=field)
    for s in script.statements:
        if isinstance(s, OptionDecl):
            if s.name in ex.options:
                raise GintError(f"duplicate option {s.name!r}")
            ex.options[s.name] = s.value
    for s in script.statements:
        try:
            if isinstance(s, RingDecl):
                ex.exec_ring(s)
            elif isinstance(s, IdealDecl):
                ex.ideals[s.name] = ex.eval_ideal(s.expr)
            elif isinstance(s, ModuleDecl):
                ex.modules[s.name] = ex.eval_module(s.expr)
        except GintError as e:
            msg = e.args[0] if e.args else str(e)
            e.args = (f"{msg} [in: {statement_text(s)}]",) + tuple(e.args[1:])
            raise
    return dict(ex.modules)
