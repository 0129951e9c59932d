"""Certified complex root enclosures for rational polynomials.

Strategy: exact square-free decomposition first, then per square-free factor

1. rational roots are split off exactly (continued-fraction probing of
   Sturm isolating intervals) and reported with radius zero;
2. the remaining factor is handed to an Aberth-Ehrlich simultaneous
   iteration in mpmath at the working precision, with deterministic initial
   points on a Cauchy-bound circle;
3. every candidate center is certified by the exact bound
   |x - nearest root| <= deg * |f(x)| / |f'(x)|, evaluated in exact rational
   arithmetic at the dyadic center (mpmath supplies candidates only, never
   the certificate);
4. precision doubles until all disks are pairwise disjoint, in which case
   each disk provably contains exactly one root.

Downstream consumers compare disk positions against vertical lines.  A disk
that straddles the line is never forced; the caller combines with the exact
axis test in the stability layer instead (roots exactly on a threshold line
cannot be separated at any finite precision).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import mpmath as mp

from .exact import (RationalPolynomial, as_fraction, rational_roots,
                    square_free_decomposition)


class PrecisionExceededError(RuntimeError):
    """Raised when the certification ladder tops out (default 4096 bits)."""


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    if man == 0 and exp != 0:
        raise ValueError("non-finite value cannot be converted exactly")
    v = Fraction(man)
    if exp >= 0:
        v *= 1 << exp
    else:
        v /= 1 << (-exp)
    return -v if sign else v


def _sqrt_upper_pow2(q: Fraction) -> Fraction:
    """A power of two >= sqrt(q), for q >= 0 (within a factor of ~2.8)."""
    if q == 0:
        return Fraction(0)
    nb = q.numerator.bit_length()
    db = q.denominator.bit_length()
    e = (nb + 1) // 2 - (db - 1) // 2
    return Fraction(2) ** e


@dataclass(frozen=True)
class CertifiedRoot:
    """Closed disk certified to contain exactly `multiplicity` roots."""

    re: Fraction
    im: Fraction
    radius: Fraction
    multiplicity: int

    @property
    def exact(self) -> bool:
        return self.radius == 0

    def as_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def as_mpc(self, ctx=mp.mp):
        return ctx.mpc(ctx.mpf(self.re.numerator) / ctx.mpf(self.re.denominator),
                       ctx.mpf(self.im.numerator) / ctx.mpf(self.im.denominator))

    def to_json(self) -> dict:
        return {
            "re": str(self.re),
            "im": str(self.im),
            "radius": str(self.radius),
            "multiplicity": self.multiplicity,
        }


@dataclass
class OrderedRootSet:
    """Roots sorted by (real part, imaginary part), with the symmetric pairing."""

    roots: tuple
    source: RationalPolynomial
    precision_bits: int

    @property
    def degree(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    def pairing(self) -> dict:
        """Index pairing j <-> d - j + 1 (1-based) over roots with multiplicity."""
        d = self.degree
        return {j: d - j + 1 for j in range(1, d + 1)}

    def expanded(self) -> list:
        """Roots repeated by multiplicity, in sorted order."""
        out = []
        for r in self.roots:
            out.extend([r] * r.multiplicity)
        return out


@dataclass(frozen=True)
class Unresolved:
    """Disk/line separation failed at the current precision."""

    straddling: tuple  # indices into OrderedRootSet.roots


@dataclass(frozen=True)
class RealPartPosition:
    left: int
    axis: int
    right: int


def _log_abs(fr: Fraction) -> float:
    """log|fr| for nonzero Fraction, safe for arbitrarily large integers."""
    return math.log(abs(fr.numerator)) - math.log(fr.denominator)


def _initial_radii(coeffs: Sequence[Fraction]) -> list:
    """Per-root modulus estimates from the Newton polygon of the coefficients.

    Upper convex hull of (k, log|a_k|); each hull edge of horizontal span s
    contributes s starting moduli exp(-slope).  This respects mixed root
    scales, which matter here: couplings around 1e10 put some roots at
    modulus ~10 and the constant term at ~1e10.
    """
    pts = [(k, _log_abs(c)) for k, c in enumerate(coeffs) if c != 0]
    hull = []  # upper hull, left to right
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) <= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    radii = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        r = math.exp((y1 - y2) / (x2 - x1))
        radii.extend([r] * (x2 - x1))
    return radii


def _aberth(coeffs: Sequence[Fraction], prec_bits: int) -> list:
    """Aberth-Ehrlich candidates for a square-free polynomial (ascending coeffs)."""
    d = len(coeffs) - 1
    with mp.workprec(prec_bits):
        cs = [mp.mpf(c.numerator) / mp.mpf(c.denominator) for c in coeffs]
        dcs = [k * c for k, c in enumerate(cs)][1:]

        def horner(zz, cc):
            acc = mp.mpc(0)
            for c in reversed(cc):
                acc = acc * zz + c
            return acc

        radii = _initial_radii(coeffs)
        z = [mp.mpc(mp.mpf(radii[k]) * mp.cos(2 * mp.pi * k / d + mp.mpf("0.7")),
                    mp.mpf(radii[k]) * mp.sin(2 * mp.pi * k / d + mp.mpf("0.7")))
             for k in range(d)]
        # centers only need to be good enough for the exact certificates to
        # separate; three quarters of the working precision leaves ample slack
        tol = mp.mpf(2) ** (-(3 * prec_bits) // 4)
        for _ in range(40 + 10 * d):
            max_step = mp.mpf(0)
            for i in range(d):
                pv = horner(z[i], cs)
                dv = horner(z[i], dcs)
                if dv == 0:
                    z[i] = z[i] + mp.mpc(tol, tol) * (1 + abs(z[i])) * (i + 1)
                    max_step = mp.mpf(1)
                    continue
                newton = pv / dv
                s = mp.mpc(0)
                collide = False
                for j in range(d):
                    if j == i:
                        continue
                    dz = z[i] - z[j]
                    if dz == 0:
                        collide = True
                        break
                    s += 1 / dz
                if collide:
                    z[i] = z[i] + mp.mpc(0, tol) * (1 + abs(z[i])) * (i + 1)
                    max_step = mp.mpf(1)
                    continue
                denom = 1 - newton * s
                step = newton if denom == 0 else newton / denom
                z[i] = z[i] - step
                rel = abs(step) / (1 + abs(z[i]))
                if rel > max_step:
                    max_step = rel
            if max_step < tol:
                break
        return [(_mpf_to_fraction(w.real), _mpf_to_fraction(w.imag)) for w in z]


def _certify(f: RationalPolynomial, centers: list):
    """Exact disk radii deg*|f(x)/f'(x)| at dyadic centers; None if any f' vanishes."""
    d = f.degree
    df = f.derivative()
    radii = []
    for re, im in centers:
        fr, fi = f.eval_complex_exact(re, im)
        gr, gi = df.eval_complex_exact(re, im)
        den = gr * gr + gi * gi
        if den == 0:
            return None
        num = fr * fr + fi * fi
        radii.append(d * _sqrt_upper_pow2(num / den))
    return radii


def _pairwise_disjoint(disks: list) -> bool:
    """Exact check that closed disks (re, im, radius) are pairwise disjoint."""
    n = len(disks)
    for i in range(n):
        ri, ii, pi = disks[i]
        for j in range(i + 1, n):
            rj, ij, pj = disks[j]
            dr, di = ri - rj, ii - ij
            s = pi + pj
            if dr * dr + di * di <= s * s:
                return False
    return True


def certified_roots(p: RationalPolynomial, precision_bits: int = 128,
                    max_bits: int = 4096, square_free: bool = False,
                    extract_rationals: bool = True) -> OrderedRootSet:
    """All complex roots of p as certified disks covering every root.

    Raises PrecisionExceededError if pairwise-disjoint certification is not
    reached by `max_bits` working precision (never returns silently inexact
    output).  Callers that already know p is square-free (or free of
    rational roots) can skip the corresponding exact preprocessing.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    factors = [(p.monic(), 1)] if square_free else square_free_decomposition(p)
    exact_roots = []   # (value, multiplicity)
    numeric_jobs = []  # (factor, multiplicity)
    for f, mult in factors:
        if extract_rationals:
            for r in rational_roots(f):
                f = f.divide_exact(RationalPolynomial((-r, 1)))
                exact_roots.append((r, mult))
        if f.degree >= 1:
            numeric_jobs.append((f.monic(), mult))

    prec = precision_bits
    while True:
        roots = [CertifiedRoot(re=r, im=Fraction(0), radius=Fraction(0),
                               multiplicity=m) for r, m in exact_roots]
        ok = True
        for f, mult in numeric_jobs:
            centers = _aberth(f.coeffs, prec)
            radii = _certify(f, centers)
            if radii is None:
                ok = False
                break
            for (re, im), rad in zip(centers, radii):
                roots.append(CertifiedRoot(re=re, im=im, radius=rad, multiplicity=mult))
        if ok and _pairwise_disjoint([(r.re, r.im, r.radius) for r in roots]):
            roots.sort(key=lambda r: (r.re, r.im))
            return OrderedRootSet(roots=tuple(roots), source=p, precision_bits=prec)
        if prec >= max_bits:
            raise PrecisionExceededError(
                f"root disks not separated at {prec} bits "
                f"(degree {p.degree}); inputs may have clustered roots")
        prec *= 2


def real_part_position(root_set: OrderedRootSet, threshold):
    """Count roots with real part <, =, > threshold, from disk positions.

    Exact-radius roots compare exactly.  If any positive-radius disk meets
    the vertical line Re = threshold the result is Unresolved: the caller
    must combine with the exact axis test in the stability layer instead of
    blindly escalating precision (a root exactly on the line can never be
    separated numerically).
    """
    thr = as_fraction(threshold)
    left = axis = right = 0
    straddling = []
    for idx, r in enumerate(root_set.roots):
        if r.radius == 0:
            if r.re < thr:
                left += r.multiplicity
            elif r.re > thr:
                right += r.multiplicity
            else:
                axis += r.multiplicity
        elif r.re + r.radius < thr:
            left += r.multiplicity
        elif r.re - r.radius > thr:
            right += r.multiplicity
        else:
            straddling.append(idx)
    if straddling:
        return Unresolved(straddling=tuple(straddling))
    return RealPartPosition(left=left, axis=axis, right=right)


@dataclass(frozen=True)
class TrajectoryPoint:
    c: Fraction
    label: int           # 1-based branch label
    re: Fraction
    im: Fraction
    radius: Fraction
    ambiguous: bool


def trajectory_table(poly_family: Callable[[Fraction], RationalPolynomial],
                     grid: Sequence, precision_bits: int = 128,
                     root_sets: Sequence = None) -> list:
    """Root trajectories of a one-parameter polynomial family over a grid.

    Labels are assigned by sorted order at the first grid point and carried
    forward by optimal nearest-neighbor assignment between consecutive grid
    points.  Crossings are not resolved analytically; a point is flagged
    ambiguous when a competing assignment would have been nearly as close
    (within the certified radii plus 25% of the matched distance).

    Root sets may be precomputed (e.g. concurrently, one per grid point) and
    passed in; the labeling pass itself is sequential by construction.
    """
    grid = [as_fraction(c) for c in grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly increasing")
    if root_sets is None:
        root_sets = [certified_roots(poly_family(c), precision_bits=precision_bits)
                     for c in grid]
    return label_trajectories(grid, root_sets)


def label_trajectories(grid: Sequence, root_sets: Sequence) -> list:
    """Sequential nearest-neighbor labeling pass over precomputed root sets."""
    import numpy as np
    from scipy.optimize import linear_sum_assignment

    rows: list = []
    prev_pos = None  # label -> (x, y, radius) floats
    for c, rs in zip(grid, root_sets):
        pts = [(float(r.re), float(r.im), float(r.radius), r) for r in rs.expanded()]
        if prev_pos is None:
            labels = list(range(1, len(pts) + 1))
            flags = [False] * len(pts)
        else:
            cost = np.array([[math.hypot(px - qx, py - qy)
                              for (qx, qy, _, _) in pts]
                             for (px, py, _) in prev_pos])
            ridx, cidx = linear_sum_assignment(cost)
            labels = [0] * len(pts)
            flags = [False] * len(pts)
            for i, j in zip(ridx, cidx):
                labels[j] = i + 1
                d_best = cost[i][j]
                others = [cost[k][j] for k in range(len(prev_pos)) if k != i]
                if others:
                    d_second = min(others)
                    slack = prev_pos[i][2] + pts[j][2]
                    if d_second <= 1.25 * d_best + slack:
                        flags[j] = True
        order = sorted(range(len(pts)), key=lambda k: labels[k])
        prev_pos = [None] * len(pts)
        for k in order:
            x, y, rad, root = pts[k]
            prev_pos[labels[k] - 1] = (x, y, rad)
            rows.append(TrajectoryPoint(c=c, label=labels[k], re=root.re,
                                        im=root.im, radius=root.radius,
                                        ambiguous=flags[k]))
    return rows


def trajectory_csv_rows(points: Sequence[TrajectoryPoint]) -> list:
    header = ["c", "j", "re", "im", "radius", "ambiguous_flag"]
    body = [[str(pt.c), pt.label, repr(float(pt.re)), repr(float(pt.im)),
             repr(float(pt.radius)), int(pt.ambiguous)] for pt in points]
    return [header] + body


def root_trajectories(m: int, n: int, l: int, c_grid: Sequence,
                      precision_bits: int = 128) -> list:
    """Trajectories of the indicial roots of the radial operator over a c-grid."""
    from .indicial import IndicialSpec, build_indicial

    def family(c):
        return build_indicial(IndicialSpec(m=m, n=n, l=l, c=c))

    return trajectory_table(family, c_grid, precision_bits=precision_bits)
