"""Closed-form numerical characters of a curve, its evolute, and its
curve of normals.

The bookkeeping runs through the genus: the total delta invariant gives
g, the class and inflection count follow from the genus/class formulas,
and the degrees of the evolute E and the curve of normals N come from
the contact data with the line at infinity and the circular points
(1 : +-i : 0).  Every derived field records which formula produced it.
"""

from math import comb

from .errors import InconsistentProfile, UnsupportedPosition


class InvariantRecord:
    """Plucker-style characters of one curve.

    d degree, ddual class, delta the total delta invariant summed over
    all complex singular points, kappa the class deficit (cusps count 1,
    nodes and ordinary multiple points 0), tau the delta invariant of
    the dual, iota the inflection count, g the geometric genus.
    """

    __slots__ = ("d", "ddual", "delta", "kappa", "tau", "iota", "g")

    def __init__(self, d, ddual, delta, kappa, tau, iota, g):
        self.d = d
        self.ddual = ddual
        self.delta = delta
        self.kappa = kappa
        self.tau = tau
        self.iota = iota
        self.g = g

    def as_dict(self):
        return {
            "d": self.d,
            "ddual": self.ddual,
            "delta": self.delta,
            "kappa": self.kappa,
            "tau": self.tau,
            "iota": self.iota,
        }

    def __repr__(self):
        return (
            f"InvariantRecord(d={self.d}, ddual={self.ddual}, "
            f"delta={self.delta}, kappa={self.kappa}, tau={self.tau}, "
            f"iota={self.iota}, g={self.g})"
        )


class EvoluteInvariantRecord:
    """Characters of the evolute and curve of normals of one curve.

    deltaE and tauE are total delta invariants (tauE doubles as the
    delta invariant of N), deltaN is the predicted plain node count of
    N away from its d-uple point (generic position only), node_counts
    splits the complex singularities by type when the prediction is
    complete.  provenance maps each field to the formula that set it.
    """

    __slots__ = ("dE", "dN", "deltaE", "kappaE", "tauE", "iotaE",
                 "deltaN", "node_counts", "provenance")

    def __init__(self, dE, dN, deltaE, kappaE, tauE, iotaE,
                 deltaN=None, node_counts=None, provenance=None):
        if None not in (dE, dN, kappaE, iotaE):
            if 3 * (dE - dN) != kappaE - iotaE:
                raise InconsistentProfile(
                    "3(dE - dN) != kappaE - iotaE: "
                    f"{dE}, {dN}, {kappaE}, {iotaE}"
                )
        self.dE = dE
        self.dN = dN
        self.deltaE = deltaE
        self.kappaE = kappaE
        self.tauE = tauE
        self.iotaE = iotaE
        self.deltaN = deltaN
        self.node_counts = node_counts
        self.provenance = dict(provenance or {})

    def as_dict(self):
        return {
            "dE": self.dE,
            "dN": self.dN,
            "deltaE": self.deltaE,
            "kappaE": self.kappaE,
            "tauE": self.tauE,
            "iotaE": self.iotaE,
        }

    def __repr__(self):
        return (
            f"EvoluteInvariantRecord(dE={self.dE}, dN={self.dN}, "
            f"deltaE={self.deltaE}, kappaE={self.kappaE}, "
            f"tauE={self.tauE}, iotaE={self.iotaE})"
        )


def plucker_profile(curve, profile):
    """InvariantRecord of the curve from a full singularity profile.

    The profile must cover every complex singular point with its delta
    invariant and class deficit; records the classifier leaves open
    need explicit delta/kappa entries.  Derivations: g = C(d-1,2) -
    delta, class ddual = 2d + 2g - 2 - kappa, inflections iota =
    2 ddual + 2g - 2 - d, tau = C(ddual-1,2) - g.
    """
    d = curve.d
    delta = 0
    kappa = 0
    for rec in profile.records:
        dl = rec.delta
        kp = rec.kappa
        if dl is None or kp is None:
            raise InconsistentProfile(
                f"no delta/kappa for the singularity at {rec.location}; "
                "supply explicit profile entries"
            )
        delta += dl
        kappa += kp
    g = comb(d - 1, 2) - delta
    if g < 0:
        raise InconsistentProfile(f"negative genus {g} from delta={delta}")
    ddual = 2 * d + 2 * g - 2 - kappa
    if ddual < 1:
        raise InconsistentProfile(f"nonpositive class {ddual}")
    iota = 2 * ddual + 2 * g - 2 - d
    if iota < 0:
        raise InconsistentProfile(f"negative inflection count {iota}")
    tau = comb(ddual - 1, 2) - g
    if tau < 0:
        raise InconsistentProfile(f"negative dual delta invariant {tau}")
    if 3 * (ddual - d) != iota - kappa:
        raise InconsistentProfile("3(ddual - d) != iota - kappa")
    return InvariantRecord(d, ddual, delta, kappa, tau, iota, g)


def _contact_deficit(position):
    """Degree deficit of N from the at-infinity contact data."""
    total = sum(p.count * (p.ip - p.mp) for p in position.points)
    if position.circular.on_curve:
        total += 2 * position.circular.m
    return total


def predicted_evolute_invariants(rec, position=None, iota_E=None):
    """Predicted characters of the evolute and curve of normals.

    position None means generic position with respect to the line at
    infinity and the circular points (transversal, non-circular);
    otherwise an AtInfinityReport drives the contact corrections.  When
    the curve touches the line at infinity at a circular point the
    inflection count of E has no closed form here and must be supplied
    (iota_E, typically measured from the elimination output); a curve
    singular at a circular point is out of scope entirely.
    """
    d, ddual = rec.d, rec.ddual
    kappa, iota, g = rec.kappa, rec.iota, rec.g
    prov = {}
    if position is None:
        deficit = 0
        circ_scope = True
        generic = True
    else:
        circ = position.circular
        if circ.on_curve and circ.m >= 2 and iota_E is None:
            raise UnsupportedPosition(
                "curve singular at a circular point; supply a measured "
                "inflection count for E"
            )
        circ_scope = not (circ.on_curve and circ.i > circ.m)
        deficit = _contact_deficit(position)
        generic = deficit == 0 and not circ.on_curve and all(
            p.ip == 1 and p.mp == 1 for p in position.points
        )
    dN = d + ddual - deficit
    if dN < 1:
        raise InconsistentProfile(f"nonpositive degree {dN} for N")
    prov["dN"] = (
        "d + ddual (transversal at infinity)"
        if deficit == 0
        else "d + ddual - contact corrections at infinity"
    )
    if iota_E is not None:
        ie = iota_E
        prov["iotaE"] = "supplied (measured)"
    elif circ_scope:
        ie = deficit
        prov["iotaE"] = (
            "generic position" if generic else "equal to the contact deficit"
        )
    else:
        ie = None
        prov["iotaE"] = (
            "needs a measured value: tangent to the line at infinity "
            "at a circular point"
        )
    if ie is None:
        dE = kE = deltaE = None
        prov["dE"] = prov["kappaE"] = prov["deltaE"] = "blocked on iotaE"
    elif iota_E is None and circ_scope:
        dE = 3 * d + iota - 3 * ie
        kE = 6 * d - 3 * ddual + 3 * iota - 5 * ie
        prov["dE"] = "3d + iota - 3 iotaE"
        prov["kappaE"] = "6d - 3 ddual + 3 iota - 5 iotaE"
        if dE != 2 * dN + ddual - 2 * d + kappa - ie:
            raise InconsistentProfile(
                "class-formula and envelope-degree routes disagree on dE"
            )
    else:
        dE = 2 * dN + ddual - 2 * d + kappa - ie
        kE = ie + 3 * (dE - dN)
        prov["dE"] = "2 dN + ddual - 2d + kappa - iotaE"
        prov["kappaE"] = "iotaE + 3(dE - dN)"
    if dE is not None:
        if dE < 1 or kE < 0:
            raise InconsistentProfile(f"impossible evolute characters {dE}, {kE}")
        deltaE = comb(dE - 1, 2) - g
        if deltaE < 0:
            raise InconsistentProfile(f"negative delta invariant {deltaE} for E")
        prov["deltaE"] = "C(dE-1, 2) - g"
    tauE = comb(dN - 1, 2) - g
    if tauE < 0:
        raise InconsistentProfile(f"negative delta invariant {tauE} for N")
    prov["tauE"] = "C(dN-1, 2) - g"
    deltaN = None
    node_counts = None
    if generic:
        twice = ddual * ddual + 2 * ddual * d - 4 * ddual - kappa
        if twice % 2:
            raise InconsistentProfile("odd node-count numerator for N")
        deltaN = twice // 2
        prov["deltaN"] = "(ddual^2 + 2 ddual d - 4 ddual - kappa) / 2"
        node_counts = {
            "A1_E": deltaE - kE,
            "A2_E": kE,
            "A1_N": deltaN,
            "A2_N": 0,
            "duple_N": 1,
        }
        prov["node_counts"] = (
            "nodes-and-cusps split; N keeps an ordinary d-uple point"
        )
    else:
        prov["deltaN"] = "only predicted in generic position"
    return EvoluteInvariantRecord(
        dE, dN, deltaE, kE, tauE, ie, deltaN, node_counts, prov
    )


def affine_cusp_prediction(rec):
    """Predicted complex cusps of E off the line at infinity.

    Valid in generic position, where each of the d intersections of the
    curve with the line at infinity contributes one cusp of E on it:
    kappaE - d = 5d - 3 ddual + 3 iota.
    """
    return 5 * rec.d - 3 * rec.ddual + 3 * rec.iota


_ADE_REAL = ("A1_crunode", "A1_acnode", "A2_cusp")


class KleinSchuhReport:
    """Both sides of the real class/degree formula for a dual pair.

    lhs is d - ddual; curve_terms and dual_terms list (location, m - r)
    over the real singular points; residual = lhs - (sum of curve terms
    - sum of dual terms), zero on correctly classified input.  klein
    holds the node-and-cusp specialization (real acnode/cusp tallies
    delta', kappa' of the curve and tau', i' of the dual) when every
    record is a real double point.
    """

    __slots__ = ("d", "ddual", "lhs", "curve_terms", "dual_terms",
                 "residual", "klein")

    def __init__(self, d, ddual, lhs, curve_terms, dual_terms, residual,
                 klein=None):
        self.d = d
        self.ddual = ddual
        self.lhs = lhs
        self.curve_terms = curve_terms
        self.dual_terms = dual_terms
        self.residual = residual
        self.klein = klein

    def __repr__(self):
        rhs = sum(t for _, t in self.curve_terms) - sum(
            t for _, t in self.dual_terms
        )
        return (
            f"KleinSchuhReport({self.d} - {self.ddual} = {self.lhs} "
            f"vs {rhs}, residual={self.residual})"
        )


def _ks_terms(profile):
    terms = []
    for rec in profile.records:
        if rec.r is None:
            raise InconsistentProfile(
                f"no real branch count at {rec.location}; "
                "Klein-Schuh needs r for every real singular point"
            )
        terms.append((rec.location, rec.m - rec.r))
    return terms


def klein_schuh_check(curve_profile, dual_profile, d, ddual):
    """Evaluate d - ddual = sum(m - r) - sum over the dual's points.

    Both profiles enumerate real singular points of the respective
    projective closures.  A nonzero residual is reported, not raised;
    it points at a misclassification upstream.
    """
    curve_terms = _ks_terms(curve_profile)
    dual_terms = _ks_terms(dual_profile)
    lhs = d - ddual
    rhs = sum(t for _, t in curve_terms) - sum(t for _, t in dual_terms)
    klein = None
    recs = list(curve_profile.records) + list(dual_profile.records)
    if all(rec.type in _ADE_REAL for rec in recs):
        delta_p = sum(
            1 for rec in curve_profile.records if rec.type == "A1_acnode"
        )
        kappa_p = sum(
            1 for rec in curve_profile.records if rec.type == "A2_cusp"
        )
        tau_p = sum(
            1 for rec in dual_profile.records if rec.type == "A1_acnode"
        )
        i_p = sum(1 for rec in dual_profile.records if rec.type == "A2_cusp")
        klein = {
            "delta_prime": delta_p,
            "kappa_prime": kappa_p,
            "tau_prime": tau_p,
            "i_prime": i_p,
            "identity_holds": d + 2 * tau_p + i_p
            == ddual + 2 * delta_p + kappa_p,
        }
    return KleinSchuhReport(d, ddual, lhs, curve_terms, dual_terms,
                            lhs - rhs, klein)
