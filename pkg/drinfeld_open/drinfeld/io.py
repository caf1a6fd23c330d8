"""
Module definition files and place specs.

A module file is one JSON object:

    {"name": "...", "q": 3, "base": "rational", "m_or_var": "s", "rank": 2,
     "phiT": ["0", "s", "1"]}

Coefficients are sparse polynomials "c*s^k+c*s+c" in the base variable; c is
the integer code of an element of F_q. For a finite base the variable is the
generator of F_{q^m}. Writing a parsed file reproduces it byte for byte when
the input is in canonical form.
"""
import json
import re
from typing import Dict, List

from ..algebra.fields import GF
from ..algebra.polys import PolyRing
from ..algebra.quotients import build_extension
from ..algebra.ratfunc import Frac, RationalFunctionField
from ..errors import ModuleFileError
from .family import Place
from .module import DrinfeldModule

FIELDS = ("name", "q", "base", "m_or_var", "rank", "phiT")
_TERM = re.compile(r"^(?:(\d+)\*)?([A-Za-z_]\w*)(?:\^(\d+))?$|^(\d+)$")


def _line_of(text: str, key: str) -> int:
    """1-based line of the first occurrence of "key", or 1."""
    needle = f'"{key}"'
    for i, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return i
    return 1


def parse_sparse(s: str, var: str, q: int) -> List[int]:
    """
    Coefficient codes of "c*var^k + ..." (constant first).

    Raises:
        ValueError: malformed term, wrong variable, or coefficient >= q
    """
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty coefficient")
    coeffs: Dict[int, int] = {}
    F = GF(q)
    for term in s.split("+"):
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"malformed term {term!r}")
        if m.group(4) is not None:
            c, k = int(m.group(4)), 0
        else:
            if m.group(2) != var:
                raise ValueError(f"unknown variable {m.group(2)!r}, expected {var!r}")
            c = int(m.group(1)) if m.group(1) is not None else 1
            k = int(m.group(3)) if m.group(3) is not None else 1
        if c >= q:
            raise ValueError(f"coefficient {c} is not an element code of F_{q}")
        coeffs[k] = F.add(coeffs.get(k, 0), c)
    top = max(coeffs)
    return [coeffs.get(k, 0) for k in range(top + 1)]


def format_sparse(codes: List[int], var: str) -> str:
    """Canonical sparse form, highest degree first, no spaces."""
    terms = []
    for k in range(len(codes) - 1, -1, -1):
        c = codes[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        mono = var if k == 1 else f"{var}^{k}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


def module_from_dict(data: Dict, text: str = "") -> DrinfeldModule:
    """
    Build a DrinfeldModule from a parsed module object.

    Raises:
        ModuleFileError: missing or malformed field, with line and field name
    """
    if not isinstance(data, dict):
        raise ModuleFileError("module file must hold one JSON object", line=1)
    for key in FIELDS:
        if key not in data:
            raise ModuleFileError("missing field", line=1, field=key)

    def fail(key: str, msg: str):
        raise ModuleFileError(msg, line=_line_of(text, key), field=key)

    q = data["q"]
    if not isinstance(q, int) or isinstance(q, bool):
        fail("q", "q must be an integer")
    try:
        F = GF(q)
    except ValueError as exc:
        fail("q", str(exc))
    base = data["base"]
    if base not in ("finite", "rational"):
        fail("base", f"base must be 'finite' or 'rational', got {base!r}")
    mv = data["m_or_var"]
    if base == "finite":
        if not isinstance(mv, int) or isinstance(mv, bool) or mv < 1:
            fail("m_or_var", "finite base needs a positive extension degree")
        K = build_extension(q, mv)
        var = "s"
    else:
        if not isinstance(mv, str) or not re.match(r"^[A-Za-z_]\w*$", mv) or mv == "T":
            fail("m_or_var", "rational base needs a variable name other than T")
        K = RationalFunctionField(PolyRing(F, mv))
        var = mv
    phiT = data["phiT"]
    if not isinstance(phiT, list) or len(phiT) < 2 or not all(isinstance(c, str) for c in phiT):
        fail("phiT", "phiT must be a list of at least two coefficient strings")
    rank = data["rank"]
    if rank != len(phiT) - 1:
        fail("rank", f"rank {rank} does not match {len(phiT)} coefficients")

    coeffs = []
    for i, s in enumerate(phiT):
        try:
            codes = parse_sparse(s, var, q)
        except ValueError as exc:
            raise ModuleFileError(str(exc), line=_line_of(text, "phiT"), field=f"phiT[{i}]") from exc
        if base == "finite":
            coeffs.append(K.reduce(tuple(K.R.strip([F.element(c) for c in codes]))))
        else:
            coeffs.append(Frac(K.A.strip([F.element(c) for c in codes]), K.A.one))
    if coeffs[-1] == K.zero:
        fail("phiT", "leading coefficient of phi_T is zero")
    name = data["name"]
    if not isinstance(name, str):
        fail("name", "name must be a string")
    return DrinfeldModule(K, tuple(coeffs), name)


def loads_module(text: str) -> DrinfeldModule:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModuleFileError(exc.msg, line=exc.lineno) from exc
    return module_from_dict(data, text)


def read_module(path: str) -> DrinfeldModule:
    with open(path, "r", encoding="utf-8") as f:
        return loads_module(f.read())


def module_to_dict(phi: DrinfeldModule) -> Dict:
    K = phi.K
    F = K.base
    if phi.is_finite:
        base, mv, var = "finite", phi.m, "s"
        polys = [K.coeffs(c) for c in phi.phiT]
    else:
        if not all(K.is_polynomial(c) for c in phi.phiT):
            raise ValueError("only polynomial coefficients can be written")
        base, mv, var = "rational", K.A.var, K.A.var
        polys = [list(c.num) for c in phi.phiT]
    strings = [format_sparse([F.index(x) for x in p], var) for p in polys]
    return {
        "name": phi.name,
        "q": phi.q,
        "base": base,
        "m_or_var": mv,
        "rank": phi.rank,
        "phiT": strings,
    }


def dumps_module(phi: DrinfeldModule) -> str:
    return json.dumps(module_to_dict(phi), indent=2) + "\n"


def write_module(phi: DrinfeldModule, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_module(phi))


def parse_place(spec: str, q: int) -> Place:
    """
    "k:expr" with expr a sparse polynomial in z, the generator of F_{q^k}.

    Raises:
        ModuleFileError: malformed spec (field 'place')
    """
    head, sep, expr = spec.partition(":")
    try:
        if not sep:
            raise ValueError("expected k:expr")
        k = int(head)
        if k < 1:
            raise ValueError("place degree must be >= 1")
        codes = parse_sparse(expr, "z", q)
    except ValueError as exc:
        raise ModuleFileError(str(exc), field="place") from exc
    L = build_extension(q, k)
    F = L.base
    return Place(q, k, L.reduce(L.R.strip([F.element(c) for c in codes])))

