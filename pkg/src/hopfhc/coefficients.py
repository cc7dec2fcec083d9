"""Coefficient module/comodules Y over a preset bialgebra.

Y is finite dimensional with basis indices ``0..dim-1``. The action is
given word-wise (``act_word(w, i) -> {j: c}``) and the coaction basis-wise
(``coaction[i] -> {(word, j): c}``, i.e. y(-1) (x) y(0)).
"""

from __future__ import annotations

import itertools

from .algebras import Bialgebra, add_into, multiply
from .errors import DegreeOverflow, NotHopf, ValidationError
from .linalg import echelonize, membership, vec_axpy


class CoefficientModule:
    def __init__(self, H: Bialgebra, labels: list, act_word, coaction: list, name: str = "custom", validate=True):
        self.H = H
        self.labels = list(labels)
        self.dim = len(labels)
        self._act_word = act_word
        self.coaction = coaction
        self.name = name
        self.params: dict = {}
        self._act_cache: dict = {}
        self._coact_iter_cache: dict = {}
        self.eps_action = False
        self.trivial_coaction = False
        if validate:
            self.validate()

    # structure maps ------------------------------------------------------
    def act_word(self, w, i: int) -> dict:
        key = (w, i)
        r = self._act_cache.get(key)
        if r is None:
            r = self._act_word(w, i)
            self._act_cache[key] = r
        return r

    def act(self, b: dict, y: dict) -> dict:
        out: dict = {}
        for w, c in b.items():
            for i, d in y.items():
                vec_axpy(out, c * d, self.act_word(w, i))
        return out

    def coact(self, y: dict) -> dict:
        out: dict = {}
        for i, c in y.items():
            for k, d in self.coaction[i].items():
                add_into(out, k, c * d)
        return out

    def coact_iter(self, i: int, k: int) -> dict:
        """k-fold coaction y(-k) (x) ... (x) y(-1) (x) y(0) as {(w_1..w_k, j): c}."""
        key = (i, k)
        r = self._coact_iter_cache.get(key)
        if r is None:
            if k == 0:
                r = {((), i): 1}
            else:
                r = {}
                for (w, j), c in self.coaction[i].items():
                    for legs, d in self.H.delta_n_word(w, k - 1).items():
                        add_into(r, (legs, j), c * d)
            self._coact_iter_cache[key] = r
        return r

    def label(self, i: int) -> str:
        return self.labels[i]

    def unit_vector(self, i: int) -> dict:
        return {i: 1}

    # axioms --------------------------------------------------------------
    def _sample_words(self):
        H = self.H
        if H.cap is None:
            return H.basis()
        return [w for w in H.basis() if all(abs(e) <= 1 for e in w)]

    def validate(self) -> None:
        H = self.H
        for i in range(self.dim):
            if self.act_word(H.unit, i) != {i: 1}:
                raise ValidationError("coefficient", f"unit does not act as identity on {self.labels[i]}")
        words = self._sample_words()
        for u, v in itertools.product(words, repeat=2):
            try:
                uv = H.mul_words(u, v)
            except DegreeOverflow:
                continue
            for i in range(self.dim):
                lhs = self.act(uv, {i: 1})
                rhs = self.act({u: 1}, self.act_word(v, i))
                if lhs != rhs:
                    raise ValidationError(
                        "coefficient", f"not a module: ({H.word_str(u)}{H.word_str(v)}).{self.labels[i]}"
                    )
        for i in range(self.dim):
            rho = self.coaction[i]
            counit: dict = {}
            for (w, j), c in rho.items():
                e = H.eps_word(w)
                if e:
                    add_into(counit, j, c * e)
            if counit != {i: 1}:
                raise ValidationError("coefficient", f"coaction not counital on {self.labels[i]}")
            left: dict = {}
            for (w, j), c in rho.items():
                for (a, b), d in H.delta_word(w).items():
                    add_into(left, (a, b, j), c * d)
            right: dict = {}
            for (w, j), c in rho.items():
                for (v, l), d in self.coaction[j].items():
                    add_into(right, (w, v, l), c * d)
            if left != right:
                raise ValidationError("coefficient", f"coaction not coassociative on {self.labels[i]}")

    def __repr__(self):
        return f"CoefficientModule({self.name}, dim={self.dim}, over {self.H.name})"


def act(Y: CoefficientModule, b: dict, y: dict) -> dict:
    return Y.act(b, y)


def coact(Y: CoefficientModule, y: dict) -> dict:
    return Y.coact(y)


def is_m_stable(Y: CoefficientModule, m: int) -> bool:
    """S^m(y(-1)) . y(0) = y on every basis vector."""
    H = Y.H
    if m != 0 and not H.is_hopf:
        raise NotHopf(f"{H.name} has no antipode")
    for i in range(Y.dim):
        out: dict = {}
        for (w, j), c in Y.coaction[i].items():
            s = H.antipode_word(w, m) if m else {w: 1}
            for v, d in s.items():
                vec_axpy(out, c * d, Y.act_word(v, j))
        if out != {i: 1}:
            return False
    return True


def is_stable(Y: CoefficientModule) -> bool:
    return is_m_stable(Y, 0) and is_m_stable(Y, 1)


def is_aYD(Y: CoefficientModule):
    """Check rho(h.y) = h(1) y(-1) S^-1(h(3)) (x) h(2).y(0) on basis pairs.

    Returns ``(True, None)`` or ``(False, witness)`` with the first failing
    pair as ``{"h": ..., "y": ..., "lhs": ..., "rhs": ...}``. Pairs leaving
    the truncation window of a capped preset are skipped.
    """
    H = Y.H
    if not H.is_hopf:
        raise NotHopf(f"{H.name} has no antipode")
    for w in H.basis():
        for i in range(Y.dim):
            try:
                lhs = Y.coact(Y.act_word(w, i))
                rhs: dict = {}
                for (h1, h2, h3), c in H.delta_n_word(w, 2).items():
                    s3 = H.antipode_word(h3, -1)
                    for (u, j), d in Y.coaction[i].items():
                        left = multiply(H, multiply(H, {h1: 1}, {u: 1}), s3)
                        for l, e in Y.act_word(h2, j).items():
                            for v, f in left.items():
                                add_into(rhs, (v, l), c * d * e * f)
            except DegreeOverflow:
                continue
            if lhs != rhs:
                return False, {
                    "h": H.word_str(w),
                    "y": Y.labels[i],
                    "lhs": tensor_str(Y, lhs),
                    "rhs": tensor_str(Y, rhs),
                }
    return True, None


def tensor_str(Y: CoefficientModule, t: dict) -> str:
    if not t:
        return "0"
    parts = []
    for (w, j), c in sorted(t.items(), key=lambda kv: repr(kv[0])):
        parts.append(f"{c}*{Y.H.word_str(w)}(x){Y.labels[j]}")
    return " + ".join(parts)


# ----------------------------------------------------------------------
# presets


def trivial(H: Bialgebra) -> CoefficientModule:
    """Y = k with b.1 = eps(b) and 1 -> 1 (x) 1."""
    Y = CoefficientModule(
        H, ["1"], lambda w, i: {0: H.eps_word(w)} if H.eps_word(w) else {}, [{(H.unit, 0): 1}], "trivial"
    )
    Y.eps_action = Y.trivial_coaction = True
    return Y


def character_from_values(H: Bialgebra, values: dict) -> dict:
    """Extend generator values (default eps) multiplicatively to all basis words."""
    out = {}
    for w in H.basis():
        v = 1
        for g in H.factorize(w):
            v = v * values.get(g, H.eps_word(g))
        out[w] = v
    return out


def is_character(H: Bialgebra, delta) -> bool:
    if delta(H.unit) != 1:
        return False
    for u, v in itertools.product(H.basis(), repeat=2):
        try:
            uv = H.mul_words(u, v)
        except DegreeOverflow:
            continue
        total = 0
        for w, c in uv.items():
            total = total + c * delta(w)
        if total != delta(u) * delta(v):
            return False
    return True


def modular_pair(H: Bialgebra, delta_values: dict | None = None, sigma=None) -> CoefficientModule:
    """1-dimensional Y: h.1 = delta(h), 1 -> sigma (x) 1.

    ``delta_values`` maps generator words to scalars (unlisted ones take eps);
    ``sigma`` is a grouplike basis word (default the unit).
    """
    sigma = H.unit if sigma is None else sigma
    table = character_from_values(H, delta_values or {})

    def delta(w):
        if w in table:
            return table[w]
        v = 1
        for g in H.factorize(w):
            v = v * (delta_values or {}).get(g, H.eps_word(g))
        return v

    if not is_character(H, delta):
        raise ValidationError("coefficient.delta", "not a character (algebra map to scalars)")
    if H.delta_word(sigma) != {(sigma, sigma): 1} or H.eps_word(sigma) != 1:
        raise ValidationError("coefficient.sigma", f"{H.word_str(sigma)} is not grouplike")
    Y = CoefficientModule(
        H, ["1"], lambda w, i: {0: delta(w)} if delta(w) else {}, [{(sigma, 0): 1}], "modular_pair"
    )
    Y.params = {"delta": {H.word_str(g): str(v) for g, v in sorted((delta_values or {}).items())}, "sigma": H.word_str(sigma)}
    Y.eps_action = all(delta(w) == H.eps_word(w) for w in H.basis())
    Y.trivial_coaction = sigma == H.unit
    return Y


def coalgebra_self(H: Bialgebra, seed_degree: int = 1) -> CoefficientModule:
    """Y = H (or a left coideal of a capped preset) with eps-action and Delta-coaction.

    For capped presets Y is the smallest left coideal containing the words
    whose exponents sum to at most ``seed_degree``.
    """
    if H.cap is None:
        words = H.basis()
    else:
        seeds = [w for w in H.basis() if sum(abs(e) for e in w) <= seed_degree]
        words = []
        seen = set()
        queue = list(seeds)
        while queue:
            w = queue.pop(0)
            if w in seen:
                continue
            seen.add(w)
            words.append(w)
            for (_, b) in H.delta_word(w):
                if b not in seen:
                    queue.append(b)
        order = {w: i for i, w in enumerate(H.basis())}
        words.sort(key=order.__getitem__)
    index = {w: i for i, w in enumerate(words)}
    coaction = []
    for w in words:
        rho: dict = {}
        for (a, b), c in H.delta_word(w).items():
            if b not in index:
                raise ValidationError("coefficient", f"{H.word_str(w)} does not span a left coideal")
            add_into(rho, (a, index[b]), c)
        coaction.append(rho)
    Y = CoefficientModule(
        H,
        [H.word_str(w) for w in words],
        lambda w, i: {i: H.eps_word(w)} if H.eps_word(w) else {},
        coaction,
        "coalgebra_self",
    )
    Y.words = words
    Y.eps_action = True
    if H.cap is not None:
        Y.params = {"seed_degree": seed_degree}
    return Y


def trivial_coaction(H: Bialgebra, generators: list | None = None) -> CoefficientModule:
    """Y = left ideal generated by ``generators`` (default: all of H), left
    multiplication action, coaction y -> 1 (x) y."""
    if H.cap is not None:
        raise ValidationError("coefficient", "trivial_coaction needs a finite-dimensional preset")
    basis_words = H.basis()
    pos = {w: i for i, w in enumerate(basis_words)}
    gens = generators if generators is not None else [{H.unit: 1}]

    def coords(e: dict) -> dict:
        return {pos[w]: c for w, c in e.items()}

    span = echelonize(len(basis_words), (coords(multiply(H, {b: 1}, g)) for b in basis_words for g in gens))
    vecs = span.vectors
    elems = [{basis_words[k]: c for k, c in v.items()} for v in vecs]

    def act_word(w, i):
        image = coords(multiply(H, {w: 1}, elems[i]))
        co = membership(image, span)
        return {j: c for j, c in enumerate(co) if c}

    labels = []
    for e in elems:
        labels.append("+".join(f"{c}*{H.word_str(w)}" if c != 1 else H.word_str(w) for w, c in e.items()))
    Y = CoefficientModule(H, labels, act_word, [{(H.unit, i): 1} for i in range(len(elems))], "trivial_coaction")
    Y.trivial_coaction = True
    Y.elements = elems
    return Y


COEFFICIENT_NAMES = ("trivial", "modular_pair", "coalgebra_self", "trivial_coaction")


def parse_word(H: Bialgebra, label: str):
    for w in H.basis():
        if H.word_str(w) == label:
            return w
    raise ValidationError("coefficient", f"unknown basis word {label!r} for {H.name}")


def make_coefficient(H: Bialgebra, name: str, **params) -> CoefficientModule:
    from fractions import Fraction

    if name == "trivial":
        return trivial(H)
    if name == "modular_pair":
        values = {}
        spec = params.get("delta", "eps")
        if spec not in ("eps", ""):
            for item in spec.split(","):
                label, _, val = item.partition(":")
                values[parse_word(H, label.strip())] = Fraction(val.strip())
        sigma = params.get("sigma")
        return modular_pair(H, values, parse_word(H, sigma) if sigma else None)
    if name == "coalgebra_self":
        return coalgebra_self(H, int(params.get("seed_degree", 1)))
    if name == "trivial_coaction":
        gens = params.get("generators")
        if gens:
            gens = [{parse_word(H, g.strip()): 1} for g in gens.split(",")]
        return trivial_coaction(H, gens or None)
    raise ValidationError("coefficient", f"unknown coefficient preset {name!r}")
