"""Line-based run configuration.

    # comment
    algebra = uq_sl2
    algebra.q = 2
    algebra.cap = 3
    coefficient = coalgebra_self
    theory = uq_vanishing
    max_degree = 1
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebras import PRESET_NAMES
from .coefficients import COEFFICIENT_NAMES
from .errors import ParseError, ValidationError

THEORIES = ("check", "hochschild", "cyclic", "uq_vanishing")
ROUTES = ("p_image", "coinvariant_quotient", "both")

_PARAMS = {
    "algebra": {"q", "cap"},
    "coefficient": {"delta", "sigma", "seed_degree", "generators"},
}
_KEYS = {"algebra", "coefficient", "max_degree", "theory", "route", "output"}


@dataclass
class RunConfig:
    algebra: str
    algebra_params: dict = field(default_factory=dict)
    coefficient: str = "trivial"
    coefficient_params: dict = field(default_factory=dict)
    max_degree: int = 2
    theory: str = "check"
    route: str = "coinvariant_quotient"
    output: str | None = None

    def echo(self) -> dict:
        out = {
            "algebra": self.algebra,
            "coefficient": self.coefficient,
            "max_degree": str(self.max_degree),
            "theory": self.theory,
            "route": self.route,
        }
        for k, v in self.algebra_params.items():
            out[f"algebra.{k}"] = str(v)
        for k, v in self.coefficient_params.items():
            out[f"coefficient.{k}"] = str(v)
        return out


def parse_config(text: str) -> RunConfig:
    raw: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ParseError(f"expected 'key = value', got {line!r}", lineno)
        if not value:
            raise ParseError(f"empty value for {key!r}", lineno)
        if key in raw:
            raise ParseError(f"duplicate key {key!r}", lineno)
        raw[key] = value
    return _validate(raw)


def _validate(raw: dict) -> RunConfig:
    params = {"algebra": {}, "coefficient": {}}
    for key, value in raw.items():
        head, dot, sub = key.partition(".")
        if dot:
            if head not in _PARAMS or sub not in _PARAMS[head]:
                raise ValidationError(key, "unknown parameter")
            params[head][sub] = value
        elif key not in _KEYS:
            raise ValidationError(key, "unknown key")
    if "algebra" not in raw:
        raise ValidationError("algebra", "missing")
    cfg = RunConfig(algebra=raw["algebra"], algebra_params=params["algebra"],
                    coefficient_params=params["coefficient"])
    if cfg.algebra not in PRESET_NAMES:
        raise ValidationError("algebra", f"unknown preset {cfg.algebra!r}")
    cfg.coefficient = raw.get("coefficient", "trivial")
    if cfg.coefficient not in COEFFICIENT_NAMES:
        raise ValidationError("coefficient", f"unknown preset {cfg.coefficient!r}")
    if "max_degree" in raw:
        try:
            cfg.max_degree = int(raw["max_degree"])
        except ValueError:
            raise ValidationError("max_degree", "not an integer") from None
        if cfg.max_degree < 0:
            raise ValidationError("max_degree", "must be >= 0")
    cfg.theory = raw.get("theory", "check")
    if cfg.theory not in THEORIES:
        raise ValidationError("theory", f"expected one of {', '.join(THEORIES)}")
    cfg.route = raw.get("route", "coinvariant_quotient")
    if cfg.route not in ROUTES:
        raise ValidationError("route", f"expected one of {', '.join(ROUTES)}")
    cfg.output = raw.get("output")
    if cfg.theory == "uq_vanishing" and cfg.algebra != "uq_sl2":
        raise ValidationError("theory", "uq_vanishing requires algebra = uq_sl2")
    for k in ("q", "cap"):
        if k in cfg.algebra_params and cfg.algebra != "uq_sl2":
            raise ValidationError(f"algebra.{k}", f"not a parameter of {cfg.algebra}")
    if "cap" in cfg.algebra_params:
        try:
            if int(cfg.algebra_params["cap"]) < 1:
                raise ValueError
        except ValueError:
            raise ValidationError("algebra.cap", "must be a positive integer") from None
    q = cfg.algebra_params.get("q")
    if q is not None and q != "symbolic":
        from fractions import Fraction
        from .scalars import is_root_of_unity

        try:
            qv = Fraction(q)
        except (ValueError, ZeroDivisionError):
            raise ValidationError("algebra.q", "expected a rational or 'symbolic'") from None
        if not qv or is_root_of_unity(qv):
            raise ValidationError("algebra.q", "q must be nonzero and not a root of unity")
    return cfg
