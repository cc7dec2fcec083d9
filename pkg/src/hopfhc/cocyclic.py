"""Operator calculus on T*(X, Y), the cobar complex and CM*(H, Y).

Chains are dicts keyed by flat tuples: ``(x0, ..., xn, y)`` for T_n and the
cobar complex (n+1 algebra slots), ``(h0, ..., h(n-1), y)`` for CM_n (n
slots), with ``y`` a coefficient basis index.
"""

from __future__ import annotations

import itertools

from .algebras import Bialgebra, add_into, multiply
from .coefficients import CoefficientModule, is_m_stable
from .errors import NotHopf, NotStable
from .linalg import SparseMatrix, matrix_inverse, vec_axpy


class RegularModuleCoalgebra:
    """B as a module coalgebra over itself by left multiplication."""

    def __init__(self, B: Bialgebra):
        self.B = B

    def basis(self):
        return self.B.basis()

    def delta_word(self, x):
        return self.B.delta_word(x)

    def eps_word(self, x):
        return self.B.eps_word(x)

    def act_word(self, b, x) -> dict:
        return self.B.mul_words(b, x)

    def word_str(self, x):
        return self.B.word_str(x)


def linear(fn, v: dict) -> dict:
    """Extend a basis-key map ``fn(key) -> chain`` linearly to v."""
    out: dict = {}
    for k, c in v.items():
        for k2, d in fn(k).items():
            add_into(out, k2, c * d)
    return out


def _slot_products(parts: list) -> dict:
    """Tensor product of per-slot elements: list of dicts -> {tuple: coeff}."""
    out = {(): 1}
    for p in parts:
        nxt: dict = {}
        for pre, c in out.items():
            for w, d in p.items():
                add_into(nxt, pre + (w,), c * d)
        out = nxt
    return out


def _mul3(B, *elems) -> dict:
    out = {B.unit: 1}
    for e in elems:
        out = multiply(B, out, e)
    return out


class TSpace:
    """T_n(X, Y) = X^(n+1) (x) Y with faces, cyclic maps and the diagonal B-action."""

    def __init__(self, B: Bialgebra, Y: CoefficientModule, X=None):
        self.B = B
        self.Y = Y
        self.X = X if X is not None else RegularModuleCoalgebra(B)
        self._bases: dict = {}
        self._index: dict = {}
        self._cache: dict = {}

    # bases ---------------------------------------------------------------
    def basis(self, n: int) -> list:
        b = self._bases.get(n)
        if b is None:
            xs = self.X.basis()
            b = [p + (y,) for p in itertools.product(xs, repeat=n + 1) for y in range(self.Y.dim)]
            self._bases[n] = b
            self._index[n] = {k: i for i, k in enumerate(b)}
        return b

    def index(self, n: int) -> dict:
        self.basis(n)
        return self._index[n]

    def dim(self, n: int) -> int:
        return len(self.X.basis()) ** (n + 1) * self.Y.dim

    def coords(self, v: dict, n: int) -> dict:
        idx = self.index(n)
        return {idx[k]: c for k, c in v.items()}

    def chain(self, vec: dict, n: int) -> dict:
        b = self.basis(n)
        return {b[i]: c for i, c in vec.items()}

    def key_str(self, k) -> str:
        return " (x) ".join([self.X.word_str(x) for x in k[:-1]] + [self.Y.labels[k[-1]]])

    def matrix(self, fn, n_in: int, n_out: int) -> SparseMatrix:
        idx = self.index(n_out)
        cols = {}
        for j, k in enumerate(self.basis(n_in)):
            img = fn({k: 1})
            col = {idx[k2]: c for k2, c in img.items()}
            if col:
                cols[j] = col
        return SparseMatrix(self.dim(n_out), self.dim(n_in), cols)

    def _cached(self, tag, k, compute):
        key = (tag, k)
        r = self._cache.get(key)
        if r is None:
            r = compute()
            self._cache[key] = r
        return r

    # operators -----------------------------------------------------------
    def face_key(self, j: int, k) -> dict:
        return self._cached(("face", j), k, lambda: self._face_key(j, k))

    def _face_key(self, j, k):
        X, Y = self.X, self.Y
        xs, y = k[:-1], k[-1]
        n = len(xs) - 1
        if not 0 <= j <= n + 1:
            raise ValueError(f"face index {j} out of range for degree {n}")
        out: dict = {}
        if j <= n:
            for (a, b), c in X.delta_word(xs[j]).items():
                add_into(out, xs[:j] + (a, b) + xs[j + 1:] + (y,), c)
            return out
        # x0(2) (x) x1 .. xn (x) y(-1) x0(1) (x) y(0)
        for (w, yj), c in Y.coaction[y].items():
            for (a, b), d in X.delta_word(xs[0]).items():
                for u, e in X.act_word(w, a).items():
                    add_into(out, (b,) + xs[1:] + (u, yj), c * d * e)
        return out

    def face(self, j: int, v: dict) -> dict:
        return linear(lambda k: self.face_key(j, k), v)

    def cyc_inv_key(self, k) -> dict:
        def compute():
            xs, y = k[:-1], k[-1]
            out: dict = {}
            for (w, yj), c in self.Y.coaction[y].items():
                for u, d in self.X.act_word(w, xs[0]).items():
                    add_into(out, xs[1:] + (u, yj), c * d)
            return out

        return self._cached("tinv", k, compute)

    def cyc_key(self, k) -> dict:
        if not self.B.is_hopf:
            raise NotHopf(f"{self.B.name} has no antipode; tau is not defined")

        def compute():
            xs, y = k[:-1], k[-1]
            out: dict = {}
            for (w, yj), c in self.Y.coaction[y].items():
                for s, d in self.B.antipode_word(w, -1).items():
                    for u, e in self.X.act_word(s, xs[-1]).items():
                        add_into(out, (u,) + xs[:-1] + (yj,), c * d * e)
            return out

        return self._cached("t", k, compute)

    def cyclic(self, direction: int, v: dict, power: int = 1) -> dict:
        fn = self.cyc_key if direction > 0 else self.cyc_inv_key
        for _ in range(power):
            v = linear(fn, v)
        return v

    def act_key(self, b, k) -> dict:
        """Diagonal action L_b = b(1) x0 (x) ... (x) b(n+1) xn (x) b(n+2) y."""

        def compute():
            xs, y = k[:-1], k[-1]
            n = len(xs) - 1
            out: dict = {}
            for legs, c in self.B.delta_n_word(b, n + 1).items():
                parts = [self.X.act_word(legs[i], xs[i]) for i in range(n + 1)]
                parts.append(self.Y.act_word(legs[-1], y))
                for key, d in _slot_products(parts).items():
                    add_into(out, key, c * d)
            return out

        return self._cached(("L", b), k, compute)

    def act(self, b: dict, v: dict) -> dict:
        out: dict = {}
        for w, c in b.items():
            vec_axpy(out, c, linear(lambda k: self.act_key(w, k), v))
        return out

    def eps_minus_L(self, b, v: dict) -> dict:
        e = self.B.eps_word(b)
        out = {k: e * c for k, c in v.items()} if e else {}
        vec_axpy(out, -1, self.act({b: 1}, v))
        return out


def face_T(T: TSpace, j: int, v: dict) -> dict:
    return T.face(j, v)


def cyclic_T(T: TSpace, direction: int, v: dict) -> dict:
    return T.cyclic(direction, v)


def face_T_conjugated(T: TSpace, j: int, v: dict) -> dict:
    """Hopf-case oracle: tau^j d_0 tau^-j."""
    return T.cyclic(1, T.face(0, T.cyclic(-1, v, j)), j)


# ----------------------------------------------------------------------
# cobar side (X = H)


def _require_hopf(B):
    if not B.is_hopf:
        raise NotHopf(f"{B.name} has no antipode")


def _right_diag(H, cs: tuple, a: dict) -> dict:
    """(c1 (x) ... (x) cn) . a = c1 a(1) (x) ... (x) cn a(n), summed over a."""
    n = len(cs)
    out: dict = {}
    if n == 0:
        # empty tensor: a acts by its counit
        e = 0
        for w, c in a.items():
            e = e + c * H.eps_word(w)
        return {(): e} if e else {}
    for w, c in a.items():
        for legs, d in H.delta_n_word(w, n - 1).items():
            parts = [H.mul_words(cs[i], legs[i]) for i in range(n)]
            for key, e in _slot_products(parts).items():
                add_into(out, key, c * d * e)
    return out


def phi(T: TSpace, direction: int, v: dict) -> dict:
    """Phi (direction +1): T_n -> cobar_n, Phi^-1 (direction -1) back."""
    H = T.B
    _require_hopf(H)

    def fn(k):
        h0, rest, y = k[0], k[1:-1], k[-1]
        out: dict = {}
        for (a, b), c in H.delta_word(h0).items():
            s = H.antipode_word(a, 1) if direction > 0 else {a: 1}
            for key, d in _right_diag(H, rest, s).items():
                add_into(out, (b,) + key + (y,), c * d)
        return out

    return linear(fn, v)


def cobar_face(T: TSpace, j: int, v: dict) -> dict:
    H, Y = T.B, T.Y
    _require_hopf(H)

    def fn(k):
        cs, y = k[:-1], k[-1]
        n = len(cs) - 1
        out: dict = {}
        if j == 0:
            for (u, w), c in coad_word(H, cs[0]).items():
                add_into(out, (u, w) + cs[1:] + (y,), c)
        elif j <= n:
            for (a, b), c in H.delta_word(cs[j]).items():
                add_into(out, cs[:j] + (a, b) + cs[j + 1:] + (y,), c)
        elif j == n + 1:
            for (w, yj), c in Y.coaction[y].items():
                add_into(out, cs + (w, yj), c)
        else:
            raise ValueError(f"face index {j} out of range for degree {n}")
        return out

    return linear(fn, v)


def coad_word(H, w) -> dict:
    out: dict = {}
    for (a, b, d), e in H.delta_n_word(w, 2).items():
        for u, f in multiply(H, {d: 1}, H.antipode_word(a, 1)).items():
            add_into(out, (b, u), e * f)
    return out


def cobar_cyclic_inv(T: TSpace, v: dict) -> dict:
    """t^-1 = Phi tau^-1 Phi^-1 on the cobar complex."""
    return phi(T, 1, T.cyclic(-1, phi(T, -1, v)))


def cobar_cyclic_inv_closed(T: TSpace, v: dict) -> dict:
    """Closed-form oracle:
    h1(2) h0(2) (x) (h2 .. hn (x) y(-1)) . h0(3) S(h0(1)) S(h1(1)) (x) y(0).
    """
    H, Y = T.B, T.Y
    _require_hopf(H)

    def fn(k):
        cs, y = k[:-1], k[-1]
        n = len(cs) - 1
        out: dict = {}
        if n == 0:
            # Phi_0 = id: t^-1 is tau^-1 itself
            for (w, yj), c in Y.coaction[y].items():
                for u, d in H.mul_words(w, cs[0]).items():
                    add_into(out, (u, yj), c * d)
            return out
        h0, h1 = cs[0], cs[1]
        for (w, yj), c in Y.coaction[y].items():
            for (a0, b0, c0), d in H.delta_n_word(h0, 2).items():
                for (a1, b1), e in H.delta_word(h1).items():
                    first = multiply(H, {b1: 1}, {b0: 1})
                    right = _mul3(H, {c0: 1}, H.antipode_word(a0, 1), H.antipode_word(a1, 1))
                    for key, f in _right_diag(H, cs[2:] + (w,), right).items():
                        for u, g in first.items():
                            add_into(out, (u,) + key + (yj,), c * d * e * f * g)
        return out

    return linear(fn, v)


# ----------------------------------------------------------------------
# CM side


def cm_project(T: TSpace, v: dict) -> dict:
    """p_n: T_n -> CM_n."""
    H, Y = T.B, T.Y
    _require_hopf(H)

    def fn(k):
        return T._cached("p", k, lambda: _project_key(H, Y, k))

    return linear(fn, v)


def _project_key(H, Y, k):
    hs, y = k[:-1], k[-1]
    n = len(hs) - 1
    out: dict = {}
    for legs_h, c in H.delta_n_word(hs[-1], n).items():
        s = [H.antipode_word(a, 1) for a in legs_h]
        for (legs_y, yj), d in Y.coact_iter(y, n).items():
            parts = [_mul3(H, s[n - i], {legs_y[i]: 1}, {hs[i]: 1}) for i in range(n)]
            parts.append(Y.act(s[0], {yj: 1}))
            for key, e in _slot_products(parts).items():
                add_into(out, key, c * d * e)
    return out


def cm_include(T: TSpace, w: dict) -> dict:
    """i_n: CM_n -> T_n, append y(-1) (x) y(0)."""
    Y = T.Y

    def fn(k):
        out: dict = {}
        for (u, yj), c in Y.coaction[k[-1]].items():
            add_into(out, k[:-1] + (u, yj), c)
        return out

    return linear(fn, w)


class CMSpace:
    """CM_n(H, Y) = H^(n) (x) Y: bases, matrices and the explicit operators."""

    def __init__(self, T: TSpace):
        self.T = T
        self.H = T.B
        self.Y = T.Y
        self._bases: dict = {}
        self._index: dict = {}
        self._tcache: dict = {}

    def basis(self, n: int) -> list:
        b = self._bases.get(n)
        if b is None:
            b = [p + (y,) for p in itertools.product(self.H.basis(), repeat=n) for y in range(self.Y.dim)]
            self._bases[n] = b
            self._index[n] = {k: i for i, k in enumerate(b)}
        return b

    def index(self, n: int) -> dict:
        self.basis(n)
        return self._index[n]

    def dim(self, n: int) -> int:
        return len(self.H.basis()) ** n * self.Y.dim

    def key_str(self, k) -> str:
        return " (x) ".join([self.H.word_str(x) for x in k[:-1]] + [self.Y.labels[k[-1]]])

    def matrix(self, fn, n_in: int, n_out: int) -> SparseMatrix:
        idx = self.index(n_out)
        cols = {}
        for j, k in enumerate(self.basis(n_in)):
            col = {idx[k2]: c for k2, c in fn({k: 1}).items()}
            if col:
                cols[j] = col
        return SparseMatrix(self.dim(n_out), self.dim(n_in), cols)

    # cyclic operator ------------------------------------------------------
    def cyclic_inv(self, w: dict) -> dict:
        """Closed formula: S(h0(n+1)) h1 (x) ... (x) S(h0(2)) y(-1) (x) S(h0(1)) y(0)."""
        H, Y = self.H, self.Y
        _require_hopf(H)
        if not is_m_stable(Y, 1):
            raise NotStable("cm_cyclic needs a 1-stable coefficient module")

        def fn(k):
            hs, y = k[:-1], k[-1]
            n = len(hs)
            if n == 0:
                return {k: 1}
            out: dict = {}
            for legs, c in H.delta_n_word(hs[0], n).items():
                s = [H.antipode_word(a, 1) for a in legs]
                for (u, yj), d in Y.coaction[y].items():
                    rest = hs[1:] + (u,)
                    parts = [multiply(H, s[n - i], {rest[i]: 1}) for i in range(n)]
                    parts.append(Y.act(s[0], {yj: 1}))
                    for key, e in _slot_products(parts).items():
                        add_into(out, key, c * d * e)
            return out

        return linear(fn, w)

    def cyclic_inv_composite(self, w: dict) -> dict:
        """Definition p tau^-1 i."""
        T = self.T
        return cm_project(T, T.cyclic(-1, cm_include(T, w)))

    def cyclic(self, w: dict) -> dict:
        """t = p tau i."""
        T = self.T
        if not w:
            return {}
        return cm_project(T, T.cyclic(1, cm_include(T, w)))

    def cyclic_matrices(self, n: int):
        """(t_n, t_n^-1) as matrices; t is the exact inverse of the closed t^-1."""
        if n in self._tcache:
            return self._tcache[n]
        if n == 0:
            ident = SparseMatrix.identity(self.dim(0))
            self._tcache[0] = (ident, ident)
            return self._tcache[0]
        tinv = self.matrix(self.cyclic_inv, n, n)
        t = self.matrix(self.cyclic, n, n)
        if not (t @ tinv == SparseMatrix.identity(self.dim(n))):
            t = matrix_inverse(tinv)
        self._tcache[n] = (t, tinv)
        return self._tcache[n]

    # faces ---------------------------------------------------------------
    def face(self, variant: str, j: int, w: dict) -> dict:
        if variant == "d":
            return linear(lambda k: self._face_d(j, k), w)
        if variant in ("dtilde", "d~"):
            return linear(lambda k: self._face_dtilde(j, k), w)
        raise ValueError(f"unknown face variant {variant!r}")

    def face_composite(self, j: int, w: dict) -> dict:
        """d_j = p dj i."""
        T = self.T
        return cm_project(T, T.face(j, cm_include(T, w)))

    def _face_d(self, j, k):
        H, Y = self.H, self.Y
        hs, y = k[:-1], k[-1]
        n = len(hs)
        if not 0 <= j <= n + 1:
            raise ValueError(f"face index {j} out of range for degree {n}")
        out: dict = {}
        if j == n + 1:
            for key, c in self.cyclic_inv({k: 1}).items():
                add_into(out, (H.unit,) + key, c)
            return out
        if j == n:
            for (u, yj), c in Y.coaction[y].items():
                add_into(out, hs + (u, yj), c)
            return out
        for (a, b), c in H.delta_word(hs[j]).items():
            add_into(out, hs[:j] + (a, b) + hs[j + 1:] + (y,), c)
        return out

    def _face_dtilde(self, j, k):
        H, Y = self.H, self.Y
        hs, y = k[:-1], k[-1]
        n = len(hs)
        if not 0 <= j <= n + 1:
            raise ValueError(f"face index {j} out of range for degree {n}")
        if j == 0:
            return {(H.unit,) + k: 1}
        out: dict = {}
        if j == n + 1:
            for (u, yj), c in Y.coaction[y].items():
                add_into(out, hs + (u, yj), c)
            return out
        for (a, b), c in H.delta_word(hs[j - 1]).items():
            add_into(out, hs[: j - 1] + (a, b) + hs[j:] + (y,), c)
        return out

    def alpha(self, w: dict) -> dict:
        """Shift isomorphism alpha_n = t_n^-1 (identity in degree 0)."""
        return self.cyclic_inv(w)


def cm_cyclic(C: CMSpace, direction: int, w: dict) -> dict:
    return C.cyclic_inv(w) if direction < 0 else C.cyclic(w)


def cm_face(C: CMSpace, variant: str, j: int, w: dict) -> dict:
    return C.face(variant, j, w)


# ----------------------------------------------------------------------
# kappa


def kappa_closed(T: TSpace, x, v: dict) -> dict:
    """Expanded form of kappa_x:

    S^-1(y(-1)) x h0 (x) h1 .. hn (x) y(0)
        - x(n+1) S^-1(y(-1)) h0 (x) ... (x) x(n+1+k) S(x(n+1-k)) h^k (x) ... (x) y(0)

    The expansion collapses x(n+k) S(x(n+1-k)) pairs to the counit, which is
    only valid when S^2 = id (e.g. cocommutative H); elsewhere it differs
    from :func:`kappa`.
    """
    H, Y = T.B, T.Y
    _require_hopf(H)
    xe = x if isinstance(x, dict) else {x: 1}

    def fn(k):
        hs, y = k[:-1], k[-1]
        n = len(hs) - 1
        out: dict = {}
        for (w, yj), c in Y.coaction[y].items():
            sy = H.antipode_word(w, -1)
            for u, d in _mul3(H, sy, xe, {hs[0]: 1}).items():
                add_into(out, (u,) + hs[1:] + (yj,), c * d)
            for xw, xc in xe.items():
                for legs, e in H.delta_n_word(xw, 2 * n).items():
                    # legs[0..2n]; x(n+1) is legs[n]
                    parts = [_mul3(H, {legs[n]: 1}, sy, {hs[0]: 1})]
                    for kk in range(1, n + 1):
                        parts.append(
                            _mul3(H, {legs[n + kk]: 1}, H.antipode_word(legs[n - kk], 1), {hs[kk]: 1})
                        )
                    for key, f in _slot_products(parts).items():
                        add_into(out, key + (yj,), -c * xc * e * f)
        return out

    return linear(fn, v)




def kappa(T: TSpace, x, v: dict) -> dict:
    """kappa_x = sum [tau, L_x(n+1)] tau^-1 (S^-1(y(-1)) h0 (x) S(x(n)) h1 (x) ... (x) S(x(1)) hn (x) y(0)),
    with x(1) .. x(n+1) the legs of Delta^(n)(x). Lies in the commutator
    submodule by construction."""
    H, Y = T.B, T.Y
    xe = x if isinstance(x, dict) else {x: 1}

    def fn(k):
        hs, y = k[:-1], k[-1]
        n = len(hs) - 1
        out: dict = {}
        for xw, xc in xe.items():
            for legs, e in H.delta_n_word(xw, n).items():
                inner: dict = {}
                for (w, yj), c in Y.coaction[y].items():
                    parts = [multiply(H, H.antipode_word(w, -1), {hs[0]: 1})]
                    for kk in range(1, n + 1):
                        parts.append(multiply(H, H.antipode_word(legs[n - kk], 1), {hs[kk]: 1}))
                    for key, f in _slot_products(parts).items():
                        add_into(inner, key + (yj,), c * f)
                u = T.cyclic(-1, inner)
                last = {legs[n]: 1}
                a = T.cyclic(1, T.act(last, u))
                b = T.act(last, T.cyclic(1, u))
                vec_axpy(out, xc * e, a)
                vec_axpy(out, -xc * e, b)
        return out

    return linear(fn, v)


def kappa_conjugated(T: TSpace, x, j: int, v: dict) -> dict:
    """tau^j kappa_x tau^-j."""
    return T.cyclic(1, kappa(T, x, T.cyclic(-1, v, j)), j)


def kappa_insertion(T: TSpace, x, j: int, v: dict) -> dict:
    """Reduced formula for cocommutative Y with eps-action and cocentral x:
    h0 (x) ... (x) [S^-1(y(-1)), x] h^j (x) ... (x) y(0)."""
    H, Y = T.B, T.Y
    xe = x if isinstance(x, dict) else {x: 1}

    def fn(k):
        hs, y = k[:-1], k[-1]
        out: dict = {}
        for (w, yj), c in Y.coaction[y].items():
            sy = H.antipode_word(w, -1)
            comm = _mul3(H, sy, xe, {hs[j]: 1})
            vec_axpy(comm, -1, _mul3(H, xe, sy, {hs[j]: 1}))
            for u, d in comm.items():
                add_into(out, hs[:j] + (u,) + hs[j + 1:] + (yj,), c * d)
        return out

    return linear(fn, v)
