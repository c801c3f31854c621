"""Seminormal modules on standard tableaux of a multi-coordinate skew shape.

``build_module`` realizes the simple module attached to a shape D: the basis
is SYT(D), the polynomial generators u_i and the color generators zeta_i act
diagonally through the weight of each tableau, and the simple transpositions
act by the rational seminormal rule driven by content differences.  The rest
of the module is verification machinery: exhaustive relation checks,
intertwiner checks, a commutant-dimension irreducibility oracle, central
characters, Jucys-Murphy consistency on partition shapes, and the two
automorphism twists (content shift and index reversal).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import grpalg
from .cyclo import Cyc, root_of_unity
from .errors import DimensionMismatch, NotAPartition, NotScalar
from .linalg import Mat, block_diag
from .shapes import (SkewShapeL, Tableau, Weight, _context, enumerate_syt,
                     shape_to_json, tableau_to_json)


@dataclass(frozen=True)
class ModuleRep:
    """A module given by explicit generator matrices on an ordered basis.

    ``shape``/``basis`` are metadata describing how the matrices were built;
    twists and direct sums return matrix-only modules with both set to None.
    Equality compares the matrices (and sizes), not the metadata.
    """

    ell: int
    n: int
    dim: int
    mat_s: tuple[Mat, ...]
    mat_zeta: tuple[Mat, ...]
    mat_u: tuple[Mat, ...]
    shape: SkewShapeL | None = None
    basis: tuple[Tableau, ...] | None = None

    def __eq__(self, other):
        if not isinstance(other, ModuleRep):
            return NotImplemented
        return ((self.ell, self.n, self.dim) == (other.ell, other.n, other.dim)
                and self.mat_s == other.mat_s
                and self.mat_zeta == other.mat_zeta
                and self.mat_u == other.mat_u)

    __hash__ = None


@dataclass(frozen=True)
class RelationCheck:
    name: str
    ok: bool
    witness: tuple[int, int, str] | None = None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[RelationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"relation": c.name, "ok": c.ok,
                 **({"witness": {"row": c.witness[0], "col": c.witness[1],
                                 "value": c.witness[2]}} if c.witness else {})}
                for c in self.checks
            ],
        }


def _residual(name: str, left: Mat, right: Mat) -> RelationCheck:
    diff = left - right
    if diff.is_zero():
        return RelationCheck(name, True)
    (i, j), v = min(diff.data.items())
    return RelationCheck(name, False, (i, j, repr(v)))


# ---------------------------------------------------------------------------
# construction

def build_module(shape: SkewShapeL) -> ModuleRep:
    """The seminormal module on SYT(shape).

    On a basis vector f_T with labels i, i+1 in boxes b, b' (content
    difference d = ct(b') - ct(b)):

      * different coordinates: s_i f_T = f_{s_i T};
      * b' adjacent right of b: s_i f_T = f_T (d = 1);
      * b' adjacent below b: s_i f_T = -f_T (d = -1);
      * otherwise s_i f_T = (1/d) f_T + gamma f_{s_i T}, where gamma = 1 when
        i sits in the reading-earlier box and 1 - 1/d^2 when it does not.
    """
    from .errors import DegenerateShape

    ell = shape.ell
    n = shape.n
    ctx = _context(shape)
    positions = ctx.all_positions()
    index = {p: t for t, p in enumerate(positions)}
    dim = len(positions)

    content = []
    beta = []
    for k, (r, c) in ctx.boxes:
        comp = shape.components[k]
        content.append(c + comp.offset)
        beta.append(comp.beta)

    mat_u = tuple(
        Mat.diagonal(ell, [Cyc.from_rational(ell, ell * content[pos[i]])
                           for pos in positions])
        for i in range(n))
    mat_zeta = tuple(
        Mat.diagonal(ell, [root_of_unity(ell, beta[pos[i]]) for pos in positions])
        for i in range(n))

    mats = []
    for i in range(1, n):
        m = Mat.zero(ell, dim)
        for t, pos in enumerate(positions):
            b1, b2 = pos[i - 1], pos[i]
            if beta[b1] != beta[b2]:
                swapped = pos[:i - 1] + (b2, b1) + pos[i + 1:]
                m[index[swapped], t] = 1
                continue
            d = content[b2] - content[b1]
            if b2 in ctx.blocked[b1]:
                m[t, t] = Fraction(1, 1) / d  # d = +-1: row or column neighbor
                continue
            if d in (0, 1, -1):
                raise DegenerateShape(
                    f"content difference {d} between non-adjacent boxes")
            swapped = pos[:i - 1] + (b2, b1) + pos[i + 1:]
            m[t, t] = Fraction(1, 1) / d
            m[index[swapped], t] = 1 if b1 < b2 else 1 - Fraction(1, 1) / (d * d)
        mats.append(m)

    return ModuleRep(ell, n, dim, tuple(mats), mat_zeta, mat_u,
                     shape, enumerate_syt(shape))


def direct_sum(m1: ModuleRep, m2: ModuleRep) -> ModuleRep:
    if (m1.ell, m1.n) != (m2.ell, m2.n):
        raise DimensionMismatch("summands over different algebras")
    pair = lambda a, b: tuple(block_diag(m1.ell, [x, y]) for x, y in zip(a, b))
    return ModuleRep(m1.ell, m1.n, m1.dim + m2.dim,
                     pair(m1.mat_s, m2.mat_s),
                     pair(m1.mat_zeta, m2.mat_zeta),
                     pair(m1.mat_u, m2.mat_u))


# ---------------------------------------------------------------------------
# generator access

def _pi_diagonal(module: ModuleRep, i: int) -> Mat:
    """Diagonal matrix ell * [zeta_i and zeta_{i+1} eigenvalues agree]."""
    ell = module.ell
    zi, zj = module.mat_zeta[i - 1], module.mat_zeta[i]
    values = [Cyc.from_rational(ell, Fraction(ell)) if zi[t, t] == zj[t, t]
              else Cyc.zero(ell) for t in range(module.dim)]
    return Mat.diagonal(ell, values)


def _tau_matrix(module: ModuleRep, i: int) -> Mat:
    """s_i minus the diagonal correction pi/(u_{i+1} - u_i) on each basis
    vector; zero correction where the zeta eigenvalues differ."""
    ell = module.ell
    ui, uj = module.mat_u[i - 1], module.mat_u[i]
    zi, zj = module.mat_zeta[i - 1], module.mat_zeta[i]
    m = module.mat_s[i - 1].copy()
    for t in range(module.dim):
        if zi[t, t] == zj[t, t]:
            d = uj[t, t] - ui[t, t]
            if d.is_zero():
                raise ZeroDivisionError(
                    f"intertwiner {i} undefined: equal u-eigenvalues with "
                    f"matching color at basis vector {t}")
            m[t, t] = m[t, t] - Cyc.from_rational(ell, Fraction(ell)) * d.inverse()
    return m


def generator_matrix(module: ModuleRep, kind: str, i: int) -> Mat:
    """Matrix of a named generator: kind in {"u", "zeta", "s", "tau", "pi"},
    index 1-based (u/zeta: 1..n, s/tau/pi: 1..n-1)."""
    n = module.n
    if kind in ("u", "zeta"):
        if not 1 <= i <= n:
            raise IndexError(f"{kind}_{i} out of range for n={n}")
        return (module.mat_u if kind == "u" else module.mat_zeta)[i - 1].copy()
    if kind in ("s", "tau", "pi"):
        if not 1 <= i <= n - 1:
            raise IndexError(f"{kind}_{i} out of range for n={n}")
        if kind == "s":
            return module.mat_s[i - 1].copy()
        if kind == "tau":
            return _tau_matrix(module, i)
        return _pi_diagonal(module, i)
    raise ValueError(f"unknown generator kind {kind!r}")


# ---------------------------------------------------------------------------
# verification

def verify_relations(module: ModuleRep) -> VerificationReport:
    """Exact matrix check of every defining relation: the symmetric-group
    and color-group relations, the commutation relations between the
    polynomial and group generators, and the mixed crossing relation
    s_i u_i = u_{i+1} s_i - pi_i (pi evaluated honestly in the group
    algebra, not via the diagonal shortcut)."""
    ell, n = module.ell, module.n
    s, z, u = module.mat_s, module.mat_zeta, module.mat_u
    one = Mat.identity(ell, module.dim)
    checks = []
    add = checks.append

    for i in range(1, n):
        add(_residual(f"s{i}^2=1", s[i - 1] * s[i - 1], one))
    for i in range(1, n - 1):
        add(_residual(f"s{i}s{i + 1}s{i}=s{i + 1}s{i}s{i + 1}",
                      s[i - 1] * s[i] * s[i - 1], s[i] * s[i - 1] * s[i]))
    for i in range(1, n):
        for j in range(i + 2, n):
            add(_residual(f"s{i}s{j}=s{j}s{i}",
                          s[i - 1] * s[j - 1], s[j - 1] * s[i - 1]))
    for i in range(1, n + 1):
        m = one
        for _ in range(ell):
            m = m * z[i - 1]
        add(_residual(f"zeta{i}^{ell}=1", m, one))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            add(_residual(f"zeta{i}zeta{j}=zeta{j}zeta{i}",
                          z[i - 1] * z[j - 1], z[j - 1] * z[i - 1]))
    for i in range(1, n):
        add(_residual(f"s{i}zeta{i}=zeta{i + 1}s{i}",
                      s[i - 1] * z[i - 1], z[i] * s[i - 1]))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                add(_residual(f"s{i}zeta{j}=zeta{j}s{i}",
                              s[i - 1] * z[j - 1], z[j - 1] * s[i - 1]))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            add(_residual(f"zeta{i}u{j}=u{j}zeta{i}",
                          z[i - 1] * u[j - 1], u[j - 1] * z[i - 1]))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            add(_residual(f"u{i}u{j}=u{j}u{i}",
                          u[i - 1] * u[j - 1], u[j - 1] * u[i - 1]))
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                add(_residual(f"s{i}u{j}=u{j}s{i}",
                              s[i - 1] * u[j - 1], u[j - 1] * s[i - 1]))
        pi = grpalg.evaluate_in_module(grpalg.pi_element(ell, n, i), module)
        add(_residual(f"s{i}u{i}=u{i + 1}s{i}-pi{i}",
                      s[i - 1] * u[i - 1], u[i] * s[i - 1] - pi))
    return VerificationReport(tuple(checks))


def verify_intertwiners(module: ModuleRep) -> VerificationReport:
    """Exact checks that the tau_i behave as weight intertwiners:

    (a) u_j tau_i = tau_i u_{s_i(j)} and the same with zeta;
    (b) tau_i^2 is diagonal with entry ((u_i-u_{i+1})^2 - pi^2)/(u_i-u_{i+1})^2
        evaluated on each basis vector (taken to be 1 where pi vanishes);
    (c) the braid relation for tau.
    """
    ell, n = module.ell, module.n
    u, z = module.mat_u, module.mat_zeta
    checks = []
    taus = [_tau_matrix(module, i) for i in range(1, n)]
    ell_sq = Cyc.from_rational(ell, Fraction(ell * ell))

    for i in range(1, n):
        tau = taus[i - 1]
        for j in range(1, n + 1):
            k = {i: i + 1, i + 1: i}.get(j, j)
            checks.append(_residual(f"u{j}tau{i}=tau{i}u{k}",
                                    u[j - 1] * tau, tau * u[k - 1]))
            checks.append(_residual(f"zeta{j}tau{i}=tau{i}zeta{k}",
                                    z[j - 1] * tau, tau * z[k - 1]))
        expected = Mat.zero(ell, module.dim)
        for t in range(module.dim):
            if z[i - 1][t, t] == z[i][t, t]:
                d = u[i - 1][t, t] - u[i][t, t]
                expected[t, t] = (d * d - ell_sq) * (d * d).inverse()
            else:
                expected[t, t] = 1
        checks.append(_residual(f"tau{i}^2=((u{i}-u{i + 1})^2-pi^2)/(u{i}-u{i + 1})^2",
                                tau * tau, expected))
    for i in range(1, n - 1):
        checks.append(_residual(
            f"tau{i}tau{i + 1}tau{i}=tau{i + 1}tau{i}tau{i + 1}",
            taus[i - 1] * taus[i] * taus[i - 1],
            taus[i] * taus[i - 1] * taus[i]))
    return VerificationReport(tuple(checks))


def commutant_dimension(module: ModuleRep) -> int:
    """Dimension of the space of matrices commuting with every generator.

    Commuting with the diagonal u- and zeta-matrices forces X[s, t] = 0
    unless basis vectors s, t carry the same full weight, so only those
    entries are kept as unknowns; the s-matrix commutation equations are then
    solved exactly.  Value 1 certifies irreducibility.
    """
    from .linalg import nullspace_dim

    ell, dim = module.ell, module.dim
    key = [tuple(m[t, t] for m in module.mat_u) + tuple(m[t, t] for m in module.mat_zeta)
           for t in range(dim)]
    classes: dict = {}
    for t, k in enumerate(key):
        classes.setdefault(k, []).append(t)
    var: dict[tuple[int, int], int] = {}
    for members in classes.values():
        for a in members:
            for b in members:
                var[(a, b)] = len(var)

    same = {t: classes[key[t]] for t in range(dim)}
    system = []
    for g in module.mat_s:
        eqs: dict[tuple[int, int], dict[int, Cyc]] = {}

        def bump(eq_key, v, coef):
            row = eqs.setdefault(eq_key, {})
            row[v] = row.get(v, Cyc.zero(ell)) + coef

        # residual of X g - g X at (i, j), keeping only the allowed unknowns
        for (k, j), gv in g.data.items():
            for i in same[k]:
                bump((i, j), var[(i, k)], gv)
        for (i, k), gv in g.data.items():
            for j in same[k]:
                bump((i, j), var[(k, j)], -gv)
        system.extend(eqs.values())
    return nullspace_dim(system, len(var), ell)


def central_character(module: ModuleRep) -> list[Cyc]:
    """Scalars of the elementary symmetric polynomials e_1..e_n in the u's
    followed by e_1..e_n in the zetas.  NotScalar if any evaluation fails to
    be a scalar matrix."""
    ell, n, dim = module.ell, module.n, module.dim

    def diag_vectors(mats, label):
        for m in mats:
            if any(i != j for (i, j) in m.data):
                raise NotScalar(f"{label} matrix is not diagonal")
        return [[m[t, t] for m in mats] for t in range(dim)]

    def elementary(values):
        # coefficients of prod (x + v): e_0..e_n
        coeffs = [Cyc.one(ell)] + [Cyc.zero(ell)] * len(values)
        for v in values:
            for k in range(len(values), 0, -1):
                coeffs[k] = coeffs[k] + v * coeffs[k - 1]
        return coeffs[1:]

    out = []
    for mats, label in ((module.mat_u, "u"), (module.mat_zeta, "zeta")):
        per_vector = [elementary(vals) for vals in diag_vectors(mats, label)]
        for k in range(n):
            scalars = {tuple(pv[k].coeffs) for pv in per_vector}
            if len(scalars) > 1:
                raise NotScalar(
                    f"e_{k + 1}({label}) takes {len(scalars)} distinct values")
        out.extend(per_vector[0] if per_vector else [])
    return out


def module_weights(module: ModuleRep) -> list[Weight]:
    """Weights read off the diagonal matrices: rational u-eigenvalues and
    the zeta-eigenvalue exponents, one Weight per basis vector."""
    ell, n, dim = module.ell, module.n, module.dim
    powers = [root_of_unity(ell, k) for k in range(ell)]
    for mats in (module.mat_u, module.mat_zeta):
        for m in mats:
            if any(i != j for (i, j) in m.data):
                raise ValueError("weights require diagonal u- and zeta-matrices")
    out = []
    for t in range(dim):
        a = []
        b = []
        for i in range(n):
            q = module.mat_u[i][t, t].as_rational()
            if q is None:
                raise ValueError(f"u_{i + 1} eigenvalue at {t} is not rational")
            a.append(q)
            val = module.mat_zeta[i][t, t]
            for k, p in enumerate(powers):
                if val == p:
                    b.append(k)
                    break
            else:
                raise ValueError(f"zeta_{i + 1} eigenvalue at {t} is not a root of unity")
        out.append(Weight(tuple(a), tuple(b)))
    return out


# ---------------------------------------------------------------------------
# twists

def twist(module: ModuleRep, auto: str, kappa=None) -> ModuleRep:
    """Relabel the module through an automorphism.

    ``auto="t"`` shifts every u-matrix by the rational kappa; ``auto="rho"``
    reverses indices: u_i -> -u_{n-i+1}, zeta_i -> zeta_{n-i+1}, s_i -> s_{n-i}.
    The result carries no shape/basis metadata (matrices only).
    """
    ell, n = module.ell, module.n
    if auto == "t":
        if kappa is None:
            raise ValueError("content-shift twist needs a rational kappa")
        shift = Mat.identity(ell, module.dim).scale(Fraction(kappa))
        return ModuleRep(ell, n, module.dim, module.mat_s, module.mat_zeta,
                         tuple(m + shift for m in module.mat_u))
    if auto == "rho":
        if kappa is not None:
            raise ValueError("index-reversal twist takes no parameter")
        return ModuleRep(
            ell, n, module.dim,
            tuple(module.mat_s[n - 2 - i] for i in range(n - 1)),
            tuple(module.mat_zeta[n - 1 - i] for i in range(n)),
            tuple(module.mat_u[n - 1 - i].scale(-1) for i in range(n)))
    raise ValueError(f"unknown automorphism {auto!r}")


# ---------------------------------------------------------------------------
# Jucys-Murphy consistency

def is_partition_shape(shape: SkewShapeL) -> bool:
    """True when every component is a left-anchored partition with corner
    content 0 (at most one component per coordinate, offset 0)."""
    seen = set()
    for comp in shape.components:
        if comp.beta in seen or comp.offset != 0:
            return False
        seen.add(comp.beta)
        rows: dict[int, list[int]] = {}
        for r, c in comp.cells:
            rows.setdefault(r, []).append(c)
        lengths = {}
        for r, cs in rows.items():
            cs.sort()
            if cs[0] != 1 - r or cs != list(range(cs[0], cs[-1] + 1)):
                return False
            lengths[r] = len(cs)
        if sorted(rows) != list(range(1, len(rows) + 1)):
            return False
    return True


def jm_consistency(module: ModuleRep) -> VerificationReport:
    """Check that the group-algebra Jucys-Murphy sums reproduce the diagonal
    u-matrices.  Only meaningful when the module comes from a tuple of
    partitions (so its restriction to the group is the usual seminormal
    module); anything else is refused."""
    if module.shape is None or not is_partition_shape(module.shape):
        raise NotAPartition(
            "Jucys-Murphy comparison needs a module built from partitions "
            "anchored at content 0")
    checks = []
    for i in range(1, module.n + 1):
        phi = grpalg.evaluate_in_module(
            grpalg.jm_element(module.ell, module.n, i), module)
        checks.append(_residual(f"phi{i}=u{i}", phi, module.mat_u[i - 1]))
    return VerificationReport(tuple(checks))


# ---------------------------------------------------------------------------
# serialization

def _mat_to_json(m: Mat) -> dict:
    return {"rows": m.nrows,
            "entries": [[i, j, v.to_json()] for (i, j), v in sorted(m.data.items())]}


def _mat_to_dense_json(m: Mat) -> list:
    return [[v.to_json() for v in row] for row in m.dense()]


def module_to_json(module: ModuleRep, include_matrices=False, dense=False) -> dict:
    from .shapes import weight_of, weight_to_json

    if module.basis is not None:
        weights = [weight_of(t) for t in module.basis]
    else:
        weights = module_weights(module)
    data = {
        "ell": module.ell,
        "n": module.n,
        "dim": module.dim,
        "shape": shape_to_json(module.shape) if module.shape is not None else None,
        "weights": [weight_to_json(w, module.ell) for w in weights],
    }
    if module.basis is not None:
        data["basis"] = [tableau_to_json(t) for t in module.basis]
    if include_matrices:
        conv = _mat_to_dense_json if dense else _mat_to_json
        data["mat_u"] = [conv(m) for m in module.mat_u]
        data["mat_zeta"] = [conv(m) for m in module.mat_zeta]
        data["mat_s"] = [conv(m) for m in module.mat_s]
    return data
