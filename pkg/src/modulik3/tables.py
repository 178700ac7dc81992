"""Registry of transcribed weight tables and their row-by-row verification.

Fixture files are line oriented:

    id: NAME            header fields (id, space, kind, template, cohom, ...)
    param m = -1 ; 0    the table is checked once per parameter value
    block k=2 [| EXPR]  start a group of rows; bindings feed {..} in templates
    row W | W+RHO | INDEX-or-'-' [| DIM]
    heads k=1 | 2(m,m), (m+1,m-1) | '-' or INDEX@M:DIM
    cell A | B | SHAPE SHAPE ...
    nonzero SHAPE SHAPE ...
    claim EXPR | 'none' or DEG:DIM, DEG:DIM

Weight entries may be arithmetic in the parameters, e.g. (7+m,4+m;5,4,3,2,1,0),
and may carry a common denominator, e.g. (3,-1,1,-1)/2.
"""
from __future__ import annotations

import ast
import itertools
import operator
import os
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .bundlecoh import CohProfile, cohomology, decompose, get_space
from .liealg import RootSystem, add, bott, fmt_weight, weight
from .report import CheckItem, item
from .schurrep import Partition, levi_tensor, lr_tensor

FIXTURE_ENV = "MODULIK3_FIXTURES"


class UnknownTableError(KeyError):
    pass


class FixtureError(ValueError):
    pass


def fixture_dir() -> Path:
    env = os.environ.get(FIXTURE_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "fixtures"


# ---------------------------------------------------------------------------
# small evaluators

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


def evaluate(text: str, env: dict) -> Fraction:
    """Exact value of an arithmetic expression in integers and bound names."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise FixtureError(f"unbound name {node.id!r}")
            v = env[node.id]
            if isinstance(v, (tuple, str)):
                raise FixtureError(f"{node.id!r} is not a number")
            return Fraction(v)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        raise FixtureError(f"unsupported syntax in {text!r}")

    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise FixtureError(f"cannot parse {text!r}") from exc
    return ev(tree)


def parse_weight_entry(text: str, env: Optional[dict] = None) -> tuple:
    env = env or {}
    text = text.strip()
    denom = Fraction(1)
    m = re.fullmatch(r"\((.*)\)\s*/\s*(\d+)", text)
    if m:
        text, denom = m.group(1), Fraction(int(m.group(2)))
    else:
        if not (text.startswith("(") and text.endswith(")")):
            raise FixtureError(f"weight {text!r} must be parenthesised")
        text = text[1:-1]
    parts = [p for p in re.split(r"[,;]", text) if p.strip()]
    return tuple(evaluate(p, env) / denom for p in parts)


def parse_shape(text: str) -> Partition:
    text = text.strip().strip("()[]")
    parts = [int(p) for p in text.split(",") if p.strip()]
    return Partition(parts)


def _value(text: str):
    text = text.strip()
    if text.startswith("["):
        return tuple(parse_shape(text))
    if re.fullmatch(r"-?\d+", text):
        return int(text)
    return text


def parse_bindings(label: str) -> dict:
    out = {}
    if label.strip() in ("", "all"):
        return out
    for part in label.split(","):
        if "=" not in part:
            raise FixtureError(f"bad binding {part!r}")
        k, v = part.split("=", 1)
        out[k.strip()] = _value(v)
    return out


def substitute(template: str, env: dict) -> str:
    def rep(m):
        body = m.group(1).strip()
        if body in env and isinstance(env[body], tuple):
            return "[" + ",".join(str(x) for x in env[body]) + "]"
        if body in env and isinstance(env[body], str):
            return env[body]
        v = evaluate(body, env)
        if v.denominator != 1:
            raise FixtureError(f"{body} is not an integer")
        return str(v.numerator)

    return re.sub(r"\{([^{}]*)\}", rep, template)


def parse_profile(text: str) -> CohProfile:
    text = text.strip()
    if text in ("none", "-", ""):
        return CohProfile()
    d = {}
    for part in text.split(","):
        i, dim = part.split(":")
        d[int(i)] = int(dim)
    return CohProfile.from_dict(d)


def fmt_profile(p: CohProfile) -> str:
    return ", ".join(f"{i}:{d}" for i, d in p.items) or "none"


# ---------------------------------------------------------------------------
# fixtures

@dataclass
class Table:
    id: str
    space: str
    kind: str
    header: Dict[str, str]
    params: List[Tuple[str, list]]
    lines: List[Tuple[int, str, str]]
    path: Path

    def envs(self):
        names = [n for n, _ in self.params]
        for combo in itertools.product(*[v for _, v in self.params]):
            yield dict(zip(names, combo))


def load_table(path: Path) -> Table:
    header, params, lines = {}, [], []
    for n, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip() if not raw.lstrip().startswith("#") else ""
        if not line:
            continue
        m = re.match(r"^param\s+(\w+)\s*=\s*(.*)$", line)
        if m:
            params.append((m.group(1), [_value(v) for v in m.group(2).split(";")]))
            continue
        m = re.match(r"^(id|space|kind|template|cohom|compare|shapes|title):\s*(.*)$", line)
        if m:
            header[m.group(1)] = m.group(2).strip()
            continue
        m = re.match(r"^(block|row|heads|cell|nonzero|claim|flag)\b\s*(.*)$", line)
        if not m:
            raise FixtureError(f"{path.name}:{n}: cannot parse {line!r}")
        lines.append((n, m.group(1), m.group(2)))
    for key in ("id", "space", "kind"):
        if key not in header:
            raise FixtureError(f"{path.name}: missing header {key!r}")
    return Table(header["id"], get_space(header["space"]).id, header["kind"], header, params, lines, path)


def registry() -> Dict[str, Table]:
    out = {}
    d = fixture_dir()
    if not d.is_dir():
        raise FixtureError(f"fixture directory {d} does not exist")
    for p in sorted(d.glob("*.txt")):
        t = load_table(p)
        if t.id in out:
            raise FixtureError(f"duplicate table id {t.id}")
        out[t.id] = t
    return out


def table_ids() -> List[str]:
    return sorted(registry())


def get_table(table_id: str) -> Table:
    reg = registry()
    if table_id not in reg:
        raise UnknownTableError(f"unknown table {table_id!r}; known: {', '.join(sorted(reg))}")
    return reg[table_id]


# ---------------------------------------------------------------------------
# verification

def _canon(space, w):
    """Representative of a weight; type A weights are taken modulo (1,...,1)."""
    w = tuple(Fraction(x) for x in w)
    if get_space(space).family == "A":
        return tuple(x - w[-1] for x in w)
    return w


def _fmt_set(ws) -> str:
    return "{" + " ".join(fmt_weight(w) for w in sorted(ws)) + "}"


def _env_tag(env: dict) -> str:
    if not env:
        return ""
    return "[" + ",".join(f"{k}={_fmt_val(v)}" for k, v in env.items()) + "]"


def _fmt_val(v):
    if isinstance(v, tuple):
        return "(" + ",".join(map(str, v)) + ")" if v else "(0)"
    return str(v)


def _bott_text(space, w):
    r = bott(get_space(space).root_system, w)
    return "-" if r.vanishing else str(r.index), r


def _verify_bwb(t: Table) -> List[CheckItem]:
    sp = get_space(t.space)
    rho = sp.root_system.rho
    out = []
    for env in t.envs():
        tag = _env_tag(env)
        block = None

        def close(block):
            if block is None:
                return
            label, benv, expr, rows = block
            computed = {_canon(sp, w) for w in decompose(sp, expr)}
            expected = {_canon(sp, w) for w in rows}
            out.append(item(f"{t.id}/block {label}{tag}", f"{t.path.name}", _fmt_set(expected),
                            _fmt_set(computed), ok=computed == expected))

        for n, kind, rest in t.lines:
            if kind == "block":
                close(block)
                parts = [p.strip() for p in rest.split("|")]
                label = parts[0]
                benv = dict(env, **parse_bindings(label))
                tmpl = parts[1] if len(parts) > 1 else t.header.get("template")
                if not tmpl:
                    raise FixtureError(f"{t.path.name}:{n}: block without expression")
                block = (label, benv, substitute(tmpl, benv), [])
            elif kind == "row":
                if block is None:
                    raise FixtureError(f"{t.path.name}:{n}: row outside a block")
                benv = block[1]
                fields = [p.strip() for p in rest.split("|")]
                w = parse_weight_entry(fields[0], benv)
                wr = parse_weight_entry(fields[1], benv)
                idx = fields[2]
                dim = fields[3] if len(fields) > 3 else None
                block[3].append(w)
                idx_c, res = _bott_text(sp, w)
                shifted = add(w, rho)
                ok = sp.root_system.equivalent(shifted, wr) and idx_c == idx
                exp_txt = f"w+rho={fmt_weight(wr)} index={idx}"
                got_txt = f"w+rho={fmt_weight(shifted)} index={idx_c}"
                if dim is not None:
                    got_dim = 0 if res.vanishing else res.dimension
                    ok = ok and str(got_dim) == dim
                    exp_txt += f" dim={dim}"
                    got_txt += f" dim={got_dim}"
                out.append(item(f"{t.id}/row {fmt_weight(w)}{tag}", f"{t.path.name}:{n}", exp_txt, got_txt, ok=ok))
        close(block)
    return out


_HEAD = re.compile(r"(\d*)\s*(\([^()]*\))")


def _parse_heads(text: str, env: dict) -> Counter:
    out = Counter()
    for mult, w in _HEAD.findall(text):
        out[parse_weight_entry(w, env)] += int(mult) if mult else 1
    return out


def _verify_heads(t: Table) -> List[CheckItem]:
    sp = get_space(t.space)
    tmpl = t.header["template"]
    coh_tmpl = t.header.get("cohom", tmpl)
    as_set = t.header.get("compare") == "set"
    seen = set()
    out = []
    for env in t.envs():
        for n, kind, rest in t.lines:
            if kind != "heads":
                continue
            label, heads_txt, expect = [p.strip() for p in rest.split("|")]
            benv = dict(env, **parse_bindings(label))
            expr = substitute(tmpl, benv)
            head_key = (n, expr)
            if head_key not in seen:
                seen.add(head_key)
                expected = _parse_heads(heads_txt, benv)
                summands = decompose(sp, expr)
                computed = Counter()
                tails_ok = True
                for w, mult in summands.items():
                    c = _canon(sp, w)
                    if any(x != c[-1] for x in c[2:]):
                        tails_ok = False
                    computed[tuple(x - c[-1] for x in c[:2])] += mult
                expected = Counter({tuple(Fraction(x) for x in k): v for k, v in expected.items()})
                if as_set:
                    ok = set(expected) == set(computed)
                    e_txt = _fmt_set(expected)
                    c_txt = _fmt_set(computed)
                else:
                    ok = expected == computed
                    e_txt = " ".join(f"{v}{fmt_weight(k)}" for k, v in sorted(expected.items()))
                    c_txt = " ".join(f"{v}{fmt_weight(k)}" for k, v in sorted(computed.items()))
                heads_env = {k: v for k, v in benv.items() if "{" + k in tmpl or k in label}
                out.append(item(f"{t.id}/heads {label}{_env_tag(heads_env)}", f"{t.path.name}:{n}",
                                e_txt, c_txt, ok=ok and tails_ok))
            prof = cohomology(sp, substitute(coh_tmpl, benv))
            if expect == "-":
                want = CohProfile()
            else:
                m = re.fullmatch(r"(\d+)@(-?\d+):(\d+)", expect)
                if not m:
                    raise FixtureError(f"{t.path.name}:{n}: bad expectation {expect!r}")
                i, at, dim = map(int, m.groups())
                want = CohProfile.from_dict({i: dim}) if benv.get("m") == at else CohProfile()
            out.append(item(f"{t.id}/cohomology {label}{_env_tag(env)}", f"{t.path.name}:{n}",
                            fmt_profile(want), fmt_profile(prof)))
    return out


def _verify_lr(t: Table) -> List[CheckItem]:
    a5 = RootSystem("A", 5)
    out = []
    for n, kind, rest in t.lines:
        if kind != "cell":
            continue
        a_txt, b_txt, g_txt = [p.strip() for p in rest.split("|")]
        a, b = parse_shape(a_txt), parse_shape(b_txt)
        expected = {parse_shape(g) for g in re.findall(r"\([^()]*\)", g_txt)}
        lr = lr_tensor(a, b, 6)
        klimyk = levi_tensor(a5, weight(a.padded(6)), weight(b.padded(6)))
        klimyk_lr = Counter({Partition(int(x) for x in w): m for w, m in klimyk.items()})
        computed = set(lr)
        ok = computed == expected and klimyk_lr == lr
        fmt = lambda s: " ".join(str(tuple(p.padded(6))) for p in sorted(s))
        out.append(item(f"{t.id}/lr {a_txt}x{b_txt}", f"{t.path.name}:{n}", fmt(expected),
                        fmt(computed) + ("" if klimyk_lr == lr else " (Klimyk disagrees)"), ok=ok))
        expr = f"sigma([{','.join(map(str, a))}],K)*sigma([{','.join(map(str, b))}],K)*O(-2)"
        prof = cohomology(t.space, expr)
        out.append(item(f"{t.id}/vanishing {a_txt}x{b_txt}", f"{t.path.name}:{n}", "none", fmt_profile(prof)))
    return out


def _verify_nonvanishing(t: Table) -> List[CheckItem]:
    n_max = int(t.header["shapes"])
    listed, flags = set(), {}
    line_no = 0
    for n, kind, rest in t.lines:
        if kind == "nonzero":
            line_no = n
            listed |= {tuple(int(x) for x in s.strip("()").split(",")) for s in re.findall(r"\([^()]*\)", rest)}
        elif kind == "flag":
            shape, reason = [p.strip() for p in rest.split("|", 1)]
            flags[tuple(int(x) for x in shape.strip("()").split(","))] = reason
    out = []
    for a1 in range(n_max + 1):
        for a2 in range(a1 + 1):
            expr = substitute(t.header["template"], {"a1": a1, "a2": a2})
            prof = cohomology(t.space, expr)
            want = (a1, a2) in listed
            ok = bool(prof) == want
            computed = f"{'nonzero' if prof else 'zero'} ({prof})"
            # a flag documents a listed entry that disagrees with the computation
            flagged = (a1, a2) in flags and not ok
            if flagged:
                computed += f"; {flags[(a1, a2)]}"
            out.append(item(f"{t.id}/shape ({a1},{a2})", f"{t.path.name}:{line_no}",
                            "nonzero" if want else "zero", computed, ok=ok and (a1, a2) not in flags,
                            flagged=flagged))
    return out


def _verify_claims(t: Table) -> List[CheckItem]:
    out = []
    for n, kind, rest in t.lines:
        if kind != "claim":
            continue
        expr, want = [p.strip() for p in rest.rsplit("|", 1)]
        prof = cohomology(t.space, expr)
        out.append(item(f"{t.id}/claim {expr}", f"{t.path.name}:{n}", fmt_profile(parse_profile(want)),
                        fmt_profile(prof)))
    return out


_KINDS = {"bwb": _verify_bwb, "heads": _verify_heads, "lr": _verify_lr, "nonvanishing": _verify_nonvanishing}


@dataclass
class TableReport:
    table_id: str
    items: List[CheckItem] = field(default_factory=list)

    @property
    def mismatches(self) -> List[CheckItem]:
        return [i for i in self.items if i.status == "mismatch"]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_table(table_id: str) -> TableReport:
    t = get_table(table_id)
    if t.kind not in _KINDS:
        raise FixtureError(f"{t.path.name}: unknown kind {t.kind!r}")
    items = _KINDS[t.kind](t) + _verify_claims(t)
    return TableReport(t.id, items)


def registry_expressions() -> List[Tuple[str, str]]:
    """Every concrete bundle expression occurring in the registry, as (space, text)."""
    out = []
    for t in registry().values():
        if t.kind == "lr":
            for n, kind, rest in t.lines:
                if kind == "cell":
                    a, b = (parse_shape(x) for x in rest.split("|")[:2])
                    out.append((t.space, f"sigma([{','.join(map(str, a))}],K)*sigma([{','.join(map(str, b))}],K)*O(-2)"))
            continue
        if t.kind == "nonvanishing":
            n_max = int(t.header["shapes"])
            for a1 in range(n_max + 1):
                for a2 in range(a1 + 1):
                    out.append((t.space, substitute(t.header["template"], {"a1": a1, "a2": a2})))
            continue
        for env in t.envs():
            for n, kind, rest in t.lines:
                if kind in ("block", "heads"):
                    parts = [p.strip() for p in rest.split("|")]
                    benv = dict(env, **parse_bindings(parts[0]))
                    tmpl = parts[1] if kind == "block" and len(parts) > 1 else t.header.get("cohom", t.header.get("template"))
                    out.append((t.space, substitute(tmpl, benv)))
        for n, kind, rest in t.lines:
            if kind == "claim":
                out.append((t.space, rest.rsplit("|", 1)[0].strip()))
    return sorted(set(out))
