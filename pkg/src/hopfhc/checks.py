"""Identity ledger: every structural identity the package relies on, checked
exactly on basis chains. Each entry is a dict

    {name, degrees, pass, fatal, checked, witness?, note?}

``fatal`` is False when the identity is only expected under a hypothesis the
input does not satisfy (e.g. the p-route identities for non-aYD Y); such
entries are reported but do not count as assertion failures.
"""

from __future__ import annotations

from .algebras import Bialgebra, check_hopf_axioms
from .cocyclic import (
    CMSpace,
    TSpace,
    cm_include,
    cm_project,
    cobar_cyclic_inv,
    cobar_cyclic_inv_closed,
    cobar_face,
    kappa_conjugated,
    kappa_insertion,
    phi,
)
from .coefficients import CoefficientModule, is_aYD, is_m_stable
from .errors import DegreeOverflow, NotAYD, NotStable
from .linalg import SparseMatrix, echelonize, kernel_basis, vec_axpy


def _diff(a: dict, b: dict) -> dict:
    d = dict(a)
    vec_axpy(d, -1, b)
    return {k: c for k, c in d.items() if c}


def _eq(a: dict, b: dict) -> bool:
    return not _diff(a, b)


class _Tally:
    def __init__(self, name, fatal=True, note=None):
        self.name, self.fatal, self.note = name, fatal, note
        self.degrees: set = set()
        self.checked = 0
        self.skipped = 0
        self.witness = None

    def __call__(self, n, ok, witness=None):
        self.degrees.add(n)
        self.checked += 1
        if not ok and self.witness is None:
            self.witness = witness if witness is not None else {"degree": n}

    def entry(self):
        e = {"name": self.name, "degrees": sorted(self.degrees), "pass": self.witness is None,
             "fatal": self.fatal, "checked": self.checked}
        if self.skipped:
            e["skipped"] = self.skipped
        if self.witness is not None:
            e["witness"] = self.witness
        if self.note:
            e["note"] = self.note
        return e


def _chains(T, n):
    return [{k: 1} for k in T.basis(n)]


def hopf_suite(H: Bialgebra) -> list:
    out = []
    for e in check_hopf_axioms(H):
        e = dict(e)
        e["name"] = "hopf: " + e["name"]
        e.setdefault("degrees", [])
        e.setdefault("fatal", True)
        out.append(e)
    return out


def cosimplicial_suite(T: TSpace, max_degree: int) -> list:
    """Cosimplicial and para-cocyclic relations on T_n(X, Y), n <= max_degree."""
    hopf = T.B.is_hopf
    faces = _Tally("T: d_i d_j = d_(j+1) d_i (i <= j)")
    tinv_faces = _Tally("T: tau^-1 d_(j+1) = d_j tau^-1, tau^-1 d_0 = d_(n+1)")
    t_faces = _Tally("T: tau d_j = d_(j+1) tau, tau d_(n+1) = d_0")
    inverse = _Tally("T: tau tau^-1 = tau^-1 tau = id")
    for n in range(max_degree + 1):
        for v in _chains(T, n):
            wit = {"degree": n, "chain": T.key_str(next(iter(v)))}
            for j in range(n + 2):
                dj = T.face(j, v)
                for i in range(j + 1):
                    faces(n, _eq(T.face(i, dj), T.face(j + 1, T.face(i, v))), dict(wit, i=i, j=j))
                lhs = T.cyclic(-1, dj)
                rhs = T.face(j - 1, T.cyclic(-1, v)) if j else T.face(n + 1, v)
                tinv_faces(n, _eq(lhs, rhs), dict(wit, j=j))
                if hopf:
                    lhs = T.cyclic(1, dj)
                    rhs = T.face(j + 1, T.cyclic(1, v)) if j <= n else T.face(0, v)
                    t_faces(n, _eq(lhs, rhs), dict(wit, j=j))
            if hopf:
                inverse(n, _eq(T.cyclic(1, T.cyclic(-1, v)), v) and _eq(T.cyclic(-1, T.cyclic(1, v)), v), wit)
    out = [faces.entry(), tinv_faces.entry()]
    if hopf:
        out += [t_faces.entry(), inverse.entry()]
    return out


def coefficient_suite(Y: CoefficientModule) -> list:
    """Stability and aYD flags (informational)."""
    out = []
    for m in (0, 1) if Y.H.is_hopf else (0,):
        out.append({"name": f"Y {m}-stable", "degrees": [], "pass": bool(is_m_stable(Y, m)), "fatal": False})
    if Y.H.is_hopf:
        ok, wit = is_aYD(Y)
        e = {"name": "aYD", "degrees": [], "pass": bool(ok), "fatal": False}
        if not ok:
            e["witness"] = {k: str(v) for k, v in wit.items()}
        out.append(e)
    return out


def coadjoint_suite(T: TSpace, max_degree: int) -> list:
    """Phi: T_n(H, Y) -> cobar complex is an isomorphism intertwining faces and t^-1."""
    inv = _Tally("Phi: Phi Phi^-1 = Phi^-1 Phi = id")
    faces = _Tally("Phi: Phi d_j = d_j^cobar Phi")
    cyc = _Tally("Phi: Phi tau^-1 Phi^-1 = closed cobar t^-1")
    for n in range(max_degree + 1):
        for v in _chains(T, n):
            wit = {"degree": n, "chain": T.key_str(next(iter(v)))}
            pv = phi(T, 1, v)
            inv(n, _eq(phi(T, -1, pv), v) and _eq(phi(T, 1, phi(T, -1, v)), v), wit)
            for j in range(n + 2):
                faces(n, _eq(phi(T, 1, T.face(j, v)), cobar_face(T, j, pv)), dict(wit, j=j))
            cyc(n, not _diff(cobar_cyclic_inv(T, v), cobar_cyclic_inv_closed(T, v)), wit)
    return [inv.entry(), faces.entry(), cyc.entry()]


def p_suite(T: TSpace, max_degree: int) -> list:
    """Identities of the explicit projection p: T_n -> CM_n = H^n (x) Y.

    They are theorems for stable aYD Y; for other Y they are reported as
    informational.
    """
    H, Y = T.B, T.Y
    stable = is_m_stable(Y, 0) and is_m_stable(Y, 1)
    premise = bool(H.is_hopf and stable and is_aYD(Y)[0])
    if not (H.is_hopf and stable):
        return [{"name": "p-route identities", "degrees": [], "pass": True, "fatal": False,
                 "note": "skipped: needs Hopf algebra and stable Y"}]
    C = CMSpace(T)
    pi = _Tally("p: p i = id")
    tp = _Tally("p: t p = p tau", premise)
    per = _Tally("CM: t^(n+1) = id (closed form)", premise)
    dp = _Tally("p: d_j p = p d_j", premise)
    al = _Tally("CM: alpha d_j = dtilde_j alpha", premise)
    for n in range(max_degree + 1):
        for w in [{k: 1} for k in C.basis(n)]:
            wit = {"degree": n, "chain": C.key_str(next(iter(w)))}
            pi(n, _eq(cm_project(T, cm_include(T, w)), w), wit)
            u = w
            for _ in range(n + 1):
                u = C.cyclic_inv(u)
            per(n, _eq(u, w), wit)
            if n < max_degree:
                aw = C.alpha(w)
                for j in range(n + 2):
                    al(n, _eq(C.alpha(C.face("d", j, w)), C.face("dtilde", j, aw)), dict(wit, j=j))
        for v in _chains(T, n):
            wit = {"degree": n, "chain": T.key_str(next(iter(v)))}
            pv = cm_project(T, v)
            tp(n, _eq(C.cyclic(pv), cm_project(T, T.cyclic(1, v))), wit)
            if n < max_degree:
                for j in range(n + 2):
                    dp(n, _eq(C.face("d", j, pv), cm_project(T, T.face(j, v))), dict(wit, j=j))
    return [pi.entry(), tp.entry(), per.entry(), dp.entry(), al.entry()]


def kernel_suite(T: TSpace, max_degree: int) -> list:
    """ker p_n = im(eps - L) = span{eps(b) v - L_b v}: dims and both inclusions."""
    H, Y = T.B, T.Y
    if not (H.is_hopf and is_m_stable(Y, 0) and is_m_stable(Y, 1)):
        return []
    premise = bool(is_aYD(Y)[0])
    C = CMSpace(T)
    t = _Tally("ker p = im(eps - L)", premise)
    for n in range(max_degree + 1):
        cidx = C.index(n)
        P = SparseMatrix(C.dim(n), T.dim(n), {
            i: {cidx[k]: c for k, c in cm_project(T, {key: 1}).items()} for i, key in enumerate(T.basis(n))
        })
        K = kernel_basis(P)
        gens = []
        for b in H.basis():
            for k in T.basis(n):
                img = T.eps_minus_L(b, {k: 1})
                if img:
                    gens.append(T.coords(img, n))
        W = echelonize(T.dim(n), gens)
        im_in_ker = all(K.echelon().contains(v) for v in W.vectors)
        ker_in_im = all(W.echelon().contains(v) for v in K.vectors)
        ok = len(K) == len(W) and im_in_ker and ker_in_im
        t(n, ok, {"degree": n, "dim ker p": len(K), "dim im(eps-L)": len(W),
                  "im in ker": im_in_ker, "ker in im": ker_in_im})
    return [t.entry()]


def kappa_suite(T: TSpace, max_degree: int, generators=None) -> list:
    """p(tau^j kappa_x tau^-j) = 0, and agreement with the insertion formula
    when H is cocommutative and Y carries the eps-action."""
    H, Y = T.B, T.Y
    if not H.is_hopf:
        return []
    gens = generators if generators is not None else H.generators()
    premise = bool(is_m_stable(Y, 0) and is_m_stable(Y, 1) and is_aYD(Y)[0])
    vanish = _Tally("kappa: p(tau^j kappa_x tau^-j) = 0", premise)
    insertion = _Tally("kappa: tau^j kappa_x tau^-j = insertion formula at slot j")
    do_insert = H.is_cocommutative and Y.eps_action
    for n in range(max_degree + 1):
        for v in _chains(T, n):
            wit = {"degree": n, "chain": T.key_str(next(iter(v)))}
            for x in gens:
                for j in range(n + 1):
                    kc = kappa_conjugated(T, x, j, v)
                    w = dict(wit, x=H.word_str(x), j=j)
                    vanish(n, not cm_project(T, kc), w)
                    if do_insert:
                        insertion(n, not _diff(kc, kappa_insertion(T, x, j, v)), w)
    out = [vanish.entry()]
    if do_insert:
        out.append(insertion.entry())
    return out


def kappa_in_quotient(T: TSpace, max_degree: int, data, generators=None) -> list:
    """kappa_x maps to 0 in CM = B(T/I) built by the coinvariant route."""
    H = T.B
    gens = generators if generators is not None else H.generators()
    t = _Tally("kappa: q(tau^j kappa_x tau^-j) = 0 in B(T/I)")
    T2 = data.tspace
    for n in range(max_degree + 1):
        P = data.projections[n]
        for v in _chains(T2, n):
            for x in gens:
                for j in range(n + 1):
                    img = P.apply(T2.coords(kappa_conjugated(T2, x, j, v), n))
                    t(n, not img, {"degree": n, "chain": T2.key_str(next(iter(v))), "x": H.word_str(x), "j": j})
    return [t.entry()]


def L_last_face_witness(T: TSpace, max_degree: int) -> list:
    """[L_b, d_(n+1)] on T: the last face is not B-linear in general (informational)."""
    H = T.B
    found = None
    checked = 0
    for n in range(max_degree):
        for v in _chains(T, n):
            for b in H.basis():
                try:
                    a = T.act({b: 1}, T.face(n + 1, v))
                    c = T.face(n + 1, T.act({b: 1}, v))
                except DegreeOverflow:
                    continue
                checked += 1
                if not _eq(a, c):
                    found = {"degree": n, "b": H.word_str(b), "chain": T.key_str(next(iter(v)))}
                    break
            if found:
                break
        if found:
            break
    e = {"name": "[L_b, d_(n+1)] " + ("!= 0" if found else "= 0"), "degrees": list(range(max_degree)),
         "pass": True, "fatal": False, "checked": checked}
    if found:
        e["witness"] = found
    return [e]


def run_checks(H: Bialgebra, Y: CoefficientModule, max_degree: int, route: str = "coinvariant_quotient") -> list:
    """The full identity ledger used by ``theory = check``."""
    from .quotients import build_cm_complex

    ledger = hopf_suite(H) if H.cap is None or H.cap <= 3 else []
    ledger += coefficient_suite(Y)
    T = TSpace(H, Y)
    ledger += cosimplicial_suite(T, max_degree)
    if H.is_hopf:
        ledger += coadjoint_suite(T, max_degree)
        ledger += p_suite(T, max_degree)
        ledger += kernel_suite(T, max_degree)
        ledger += kappa_suite(T, max_degree)
    ledger += L_last_face_witness(T, max_degree)
    if is_m_stable(Y, 0):
        data = build_cm_complex(H, Y, max_degree, "coinvariant_quotient")
        ledger += [dict(e) for e in data.ledger]
        ledger.append({"name": "CM dims", "degrees": list(range(max_degree + 1)), "pass": True,
                       "fatal": False, "dims": list(data.dims)})
        if H.is_hopf and route in ("p_image", "both"):
            try:
                pdata = build_cm_complex(H, Y, max_degree, "p_image")
                ledger += [dict(e, name="p_image: " + e["name"]) for e in pdata.ledger]
            except (NotAYD, NotStable) as exc:
                ledger.append({"name": "p_image route", "degrees": [], "pass": False, "fatal": False,
                               "witness": {"refused": type(exc).__name__, "reason": str(exc)}})
        if H.is_hopf and getattr(data, "tspace", None) is not None:
            ledger += kappa_in_quotient(T, max_degree, data)
    return ledger
