"""JSON descriptors for every value the CLI reads or writes.

Conventions: complex scalars are [re, im] pairs; weight and signal
descriptors are tagged by "kind"; sequences serialize as sorted
[offset, re, im] triples.  Parsing failures raise DescriptorError with a
dotted location path into the document.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import DescriptorError
from .seq_algebra import CirclePoint, FinSeq
from .signals import CumSum, ExpPoly, ExpPolyTerm, Geometric, Signal, TableSignal
from .spectra import (
    Empty,
    EmptyCertificate,
    Finite,
    FullCircle,
    SpectrumPoint,
    SpectrumResult,
    UpperBound,
)
from .weights import (
    ExponentialWeight,
    PowerWeight,
    ProductWeight,
    SignalDerivedWeight,
    TableWeight,
    WeightSpec,
)


def _complex_pair(value: complex) -> list[float]:
    value = complex(value)
    return [value.real, value.imag]


def _parse_complex(data: Any, where: str) -> complex:
    if isinstance(data, (int, float)):
        return complex(data)
    if (
        isinstance(data, (list, tuple))
        and len(data) == 2
        and all(isinstance(x, (int, float)) for x in data)
    ):
        return complex(data[0], data[1])
    raise DescriptorError("expected a number or [re, im] pair", where)


def _require(data: Any, key: str, where: str) -> Any:
    if not isinstance(data, dict):
        raise DescriptorError("expected an object", where)
    if key not in data:
        raise DescriptorError(f"missing key {key!r}", where)
    return data[key]


# ---------------------------------------------------------------------------
# weights


def weight_to_json(w: WeightSpec) -> dict:
    if isinstance(w, PowerWeight):
        return {"kind": "power", "a": w.exponent}
    if isinstance(w, ExponentialWeight):
        return {"kind": "exponential", "base": w.base}
    if isinstance(w, TableWeight):
        return {"kind": "table", "halfWindow": w.half_window, "values": list(w.values)}
    if isinstance(w, ProductWeight):
        return {"kind": "product", "left": weight_to_json(w.left),
                "right": weight_to_json(w.right)}
    if isinstance(w, SignalDerivedWeight):
        return {"kind": "signalDerived", "signal": signal_to_json(w.signal),
                "supWindow": w.sup_window}
    raise TypeError(f"not a weight descriptor: {w!r}")


def weight_from_json(data: Any, where: str = "$") -> WeightSpec:
    kind = _require(data, "kind", where)
    try:
        if kind == "power":
            return PowerWeight(float(_require(data, "a", where)))
        if kind == "exponential":
            return ExponentialWeight(float(_require(data, "base", where)))
        if kind == "table":
            values = _require(data, "values", where)
            if not isinstance(values, list):
                raise DescriptorError("values must be a list", f"{where}.values")
            return TableWeight(int(_require(data, "halfWindow", where)),
                               [float(v) for v in values])
        if kind == "product":
            return ProductWeight(
                weight_from_json(_require(data, "left", where), f"{where}.left"),
                weight_from_json(_require(data, "right", where), f"{where}.right"),
            )
        if kind == "signalDerived":
            return SignalDerivedWeight(
                signal_from_json(_require(data, "signal", where), f"{where}.signal"),
                int(_require(data, "supWindow", where)),
            )
    except DescriptorError:
        raise
    except (TypeError, ValueError) as exc:
        raise DescriptorError(str(exc), where) from exc
    raise DescriptorError(f"unknown weight kind {kind!r}", where)


# ---------------------------------------------------------------------------
# signals


def signal_to_json(s: Signal) -> dict:
    if isinstance(s, ExpPoly):
        return {
            "kind": "expPoly",
            "terms": [
                {"t": term.freq.t, "coeffs": [_complex_pair(c) for c in term.coeffs]}
                for term in s.terms
            ],
        }
    if isinstance(s, Geometric):
        out: dict = {"kind": "geometric", "ratio": s.ratio}
        if s.scale != 1:
            out["scale"] = _complex_pair(s.scale)
        return out
    if isinstance(s, TableSignal):
        return {"kind": "table", "start": s.start,
                "values": [_complex_pair(v) for v in s.values]}
    if isinstance(s, CumSum):
        return {"kind": "cumsum", "inner": signal_to_json(s.inner)}
    raise TypeError(f"not a signal: {s!r}")


def signal_from_json(data: Any, where: str = "$") -> Signal:
    kind = _require(data, "kind", where)
    try:
        if kind == "expPoly":
            terms = _require(data, "terms", where)
            if not isinstance(terms, list):
                raise DescriptorError("terms must be a list", f"{where}.terms")
            parsed = []
            for i, term in enumerate(terms):
                spot = f"{where}.terms[{i}]"
                t = float(_require(term, "t", spot))
                coeffs = _require(term, "coeffs", spot)
                if not isinstance(coeffs, list) or not coeffs:
                    raise DescriptorError("coeffs must be a non-empty list",
                                          f"{spot}.coeffs")
                parsed.append(ExpPolyTerm(
                    CirclePoint(t),
                    tuple(_parse_complex(c, f"{spot}.coeffs[{j}]")
                          for j, c in enumerate(coeffs)),
                ))
            return ExpPoly(parsed)
        if kind == "geometric":
            scale = data.get("scale", 1.0)
            return Geometric(float(_require(data, "ratio", where)),
                             _parse_complex(scale, f"{where}.scale"))
        if kind == "table":
            values = _require(data, "values", where)
            if not isinstance(values, list) or not values:
                raise DescriptorError("values must be a non-empty list",
                                      f"{where}.values")
            return TableSignal(int(_require(data, "start", where)),
                               [_parse_complex(v, f"{where}.values[{i}]")
                                for i, v in enumerate(values)])
        if kind == "cumsum":
            return CumSum(signal_from_json(_require(data, "inner", where),
                                           f"{where}.inner"))
    except DescriptorError:
        raise
    except (TypeError, ValueError) as exc:
        raise DescriptorError(str(exc), where) from exc
    raise DescriptorError(f"unknown signal kind {kind!r}", where)


# ---------------------------------------------------------------------------
# finite sequences


def finseq_to_json(f: FinSeq) -> dict:
    return {"entries": [[n, v.real, v.imag] for n, v in f]}


def finseq_from_json(data: Any, where: str = "$") -> FinSeq:
    entries = _require(data, "entries", where)
    if not isinstance(entries, list):
        raise DescriptorError("entries must be a list", f"{where}.entries")
    out = {}
    for i, row in enumerate(entries):
        spot = f"{where}.entries[{i}]"
        if not isinstance(row, list) or len(row) != 3:
            raise DescriptorError("expected [n, re, im]", spot)
        n, re, im = row
        if not isinstance(n, int):
            raise DescriptorError("offset must be an integer", spot)
        out[n] = complex(re, im)
    return FinSeq(out)


# ---------------------------------------------------------------------------
# lattice polynomials


def latticepoly_to_json(p) -> dict:
    return {
        "dim": p.dim,
        "coeffs": [[list(alpha), complex(c).real, complex(c).imag]
                   for alpha, c in p.coeffs],
    }


def latticepoly_from_json(data: Any, where: str = "$"):
    from .diff_calculus import LatticePoly

    dim = _require(data, "dim", where)
    coeffs = _require(data, "coeffs", where)
    if not isinstance(coeffs, list):
        raise DescriptorError("coeffs must be a list", f"{where}.coeffs")
    out = {}
    for i, row in enumerate(coeffs):
        spot = f"{where}.coeffs[{i}]"
        if not isinstance(row, list) or len(row) != 3:
            raise DescriptorError("expected [[i, j, ...], re, im]", spot)
        alpha, re, im = row
        if not isinstance(alpha, list):
            raise DescriptorError("multi-index must be a list", spot)
        out[tuple(int(a) for a in alpha)] = complex(re, im)
    try:
        return LatticePoly(int(dim), out)
    except (TypeError, ValueError) as exc:
        raise DescriptorError(str(exc), where) from exc


# ---------------------------------------------------------------------------
# spectrum results


def spectrum_to_json(result: SpectrumResult) -> dict:
    if isinstance(result, Empty):
        cert = result.certificate
        return {
            "verdict": "empty",
            "points": [],
            "certificate": {
                "combination": finseq_to_json(cert.combination),
                "minTransformModulus": cert.min_transform_modulus,
                "grid": cert.grid,
            },
        }
    if isinstance(result, Finite):
        return {"verdict": "finite",
                "points": [{"t": p.angle.t, "mult": p.multiplicity}
                           for p in result.points]}
    if isinstance(result, FullCircle):
        return {"verdict": "fullCircle", "points": []}
    if isinstance(result, UpperBound):
        return {"verdict": "upperBound",
                "points": [{"t": p.angle.t, "mult": p.multiplicity}
                           for p in result.points]}
    raise TypeError(f"not a spectrum result: {result!r}")


def spectrum_from_json(data: Any, where: str = "$") -> SpectrumResult:
    verdict = _require(data, "verdict", where)
    points = data.get("points", [])
    parsed = tuple(
        SpectrumPoint(CirclePoint(float(_require(p, "t", f"{where}.points[{i}]"))),
                      int(p.get("mult", 1)))
        for i, p in enumerate(points)
    )
    if verdict == "empty":
        cert = _require(data, "certificate", where)
        return Empty(EmptyCertificate(
            combination=finseq_from_json(_require(cert, "combination", f"{where}.certificate"),
                                         f"{where}.certificate.combination"),
            min_transform_modulus=float(_require(cert, "minTransformModulus",
                                                 f"{where}.certificate")),
            grid=int(_require(cert, "grid", f"{where}.certificate")),
        ))
    if verdict == "finite":
        return Finite(parsed)
    if verdict == "fullCircle":
        return FullCircle()
    if verdict == "upperBound":
        return UpperBound(parsed)
    raise DescriptorError(f"unknown verdict {verdict!r}", where)


def load_json_file(path: str) -> Any:
    try:
        with open(path) as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise DescriptorError(f"file not found: {path}")
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"invalid JSON in {path}: {exc}")
