"""Buchberger's algorithm, reduced Groebner bases, and normal forms.

The engine is deterministic end to end: fixed input order, normal pair
selection (smallest lcm under the working order, ties by indices), fixed
reducer scan order, and a final sort of the reduced basis by leading
monomial. Identical inputs give byte-identical bases.
"""

from __future__ import annotations

import heapq

from .errors import InternalInconsistency, RingMismatch
from .poly import IdealPresentation, MonomialOrder, Polynomial, Ring, _add_exps

# Packed order keys are affine in the exponents: key(a + b) = key(a) + key(b)
# - key(0). Reduction loops exploit this to shift keys with one integer add.

# Internal working form: list of (key, exps, coeff), strictly descending by key.


def _internal(f: Polynomial, keyf) -> list:
    terms = [(keyf(e), e, c) for e, c in f.terms]
    terms.sort(key=lambda t: t[0], reverse=True)
    return terms


def _to_poly(ring: Ring, terms: list) -> Polynomial:
    return ring.from_terms({e: c for _, e, c in terms})


def _merge_sub(a: list, b: list, field) -> list:
    """a - b for descending term lists."""
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ka, kb = a[i][0], b[j][0]
        if ka > kb:
            out.append(a[i])
            i += 1
        elif kb > ka:
            out.append((kb, b[j][1], field.neg(b[j][2])))
            j += 1
        else:
            c = field.sub(a[i][2], b[j][2])
            if not field.is_zero(c):
                out.append((ka, a[i][1], c))
            i += 1
            j += 1
    out.extend(a[i:])
    for k in range(j, nb):
        out.append((b[k][0], b[k][1], field.neg(b[k][2])))
    return out


def _scale_shift(terms: list, exps, coeff, field, keyf) -> list:
    """coeff * x^exps * terms; order of terms is preserved by multiplicativity."""
    out = []
    for _, e, c in terms:
        ne = _add_exps(e, exps)
        out.append((keyf(ne), ne, field.mul(c, coeff)))
    return out


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _nf(terms: list, basis: list, leads: list, field, keyf, key0: int) -> list:
    """Full normal form of a working term list against (basis, leads).

    Terms live in a dict keyed by packed order key, drained through a lazy
    max-heap, so each reduction step costs the reducer's length rather than
    the whole work list.
    """
    if not terms or not basis:
        return list(terms)
    coeffs = {}
    exps_of = {}
    heap = []
    for k, e, c in terms:
        coeffs[k] = c
        exps_of[k] = e
        heap.append(-k)
    heapq.heapify(heap)
    out = []
    is_zero = field.is_zero
    fmul, fadd, fneg = field.mul, field.add, field.neg
    zero = field.zero()
    get = coeffs.get
    push, pop = heapq.heappush, heapq.heappop
    while heap:
        k = -pop(heap)
        c = get(k)
        if c is None or is_zero(c):
            continue  # stale heap entry
        e = exps_of[k]
        for le, g in zip(leads, basis):
            if _divides(le, e):
                shift = tuple(x - y for x, y in zip(e, le))
                delta = keyf(shift) - key0
                factor = fneg(c)  # reducer is monic; cancel the top term
                coeffs[k] = zero
                for kg, ge, gc in g[1:]:
                    nk = kg + delta
                    v = fmul(gc, factor)
                    old = get(nk)
                    if old is None:
                        coeffs[nk] = v
                        exps_of[nk] = _add_exps(ge, shift)
                        push(heap, -nk)
                    else:
                        coeffs[nk] = fadd(old, v)
                break
        else:
            out.append((k, e, c))
            coeffs[k] = zero
    return out


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


class ReducedGB:
    """A reduced Groebner basis: monic, mutually reduced, sorted by leading term."""

    __slots__ = ("ring", "order", "basis", "lead_exponents")

    def __init__(self, ring: Ring, order: MonomialOrder, basis):
        self.ring = ring
        self.order = order
        self.basis = tuple(basis)
        self.lead_exponents = tuple(g.leading_term(order)[0] for g in self.basis)

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def presentation(self) -> IdealPresentation:
        return IdealPresentation(self.ring, self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, ReducedGB)
            and self.ring == other.ring
            and self.order == other.order
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ring, self.order, self.basis))

    def __repr__(self):
        return f"GB{{{'; '.join(str(g) for g in self.basis) or '0'}}}"


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """S-polynomial of f and g under ``order`` (defaults to the ring order)."""
    ring = f.ring
    if g.ring != ring:
        raise RingMismatch("S-polynomial operands in different rings")
    order = order or ring.order
    field = ring.field
    ef, cf = f.leading_term(order)
    eg, cg = g.leading_term(order)
    l = _lcm(ef, eg)
    a = f.shift(tuple(x - y for x, y in zip(l, ef))).scale(field.inv(cf))
    b = g.shift(tuple(x - y for x, y in zip(l, eg))).scale(field.inv(cg))
    return a - b


def buchberger(ideal, order: MonomialOrder | None = None) -> ReducedGB:
    """Reduced Groebner basis of an IdealPresentation (or generator list)."""
    if isinstance(ideal, IdealPresentation):
        ring = ideal.ring
        gens = ideal.nonzero_generators()
    else:
        gens = tuple(g for g in ideal if not g.is_zero())
        if not gens:
            raise ValueError("cannot infer the ring from an empty generator list")
        ring = gens[0].ring
    order = order or ring.order
    keyf = order.key
    key0 = keyf((0,) * ring.nvars)
    field = ring.field

    basis: list[list] = []
    leads: list[tuple] = []
    for g in gens:
        t = _internal(g.monic(order), keyf)
        t = _nf(t, basis, leads, field, keyf, key0)
        if t:
            ic = field.inv(t[0][2])
            basis.append([(k, e, field.mul(c, ic)) for k, e, c in t])
            leads.append(t[0][1])

    pairs: list[tuple] = []
    pending: set[tuple] = set()
    processed: set[tuple] = set()

    def push_pairs(j: int):
        for i in range(j):
            l = _lcm(leads[i], leads[j])
            heapq.heappush(pairs, (keyf(l), i, j))
            pending.add((i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        l = _lcm(li, lj)
        # first criterion: coprime leading monomials
        if all(x + y == m for x, y, m in zip(li, lj, l)):
            continue
        # chain criterion, citing only honestly processed pairs
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if _divides(leads[k], l):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in processed and pjk in processed:
                    skip = True
                    break
        if skip:
            continue
        processed.add((i, j))
        fi, fj = basis[i], basis[j]
        a = _scale_shift(fi, tuple(x - y for x, y in zip(l, li)), field.one(), field, keyf)
        b = _scale_shift(fj, tuple(x - y for x, y in zip(l, lj)), field.one(), field, keyf)
        r = _nf(_merge_sub(a, b, field), basis, leads, field, keyf, key0)
        if r:
            ic = field.inv(r[0][2])
            basis.append([(k, e, field.mul(c, ic)) for k, e, c in r])
            leads.append(r[0][1])
            push_pairs(len(basis) - 1)

    return _reduce_basis(ring, order, basis, leads)


def _reduce_basis(ring: Ring, order: MonomialOrder, basis: list, leads: list) -> ReducedGB:
    field = ring.field
    keyf = order.key
    key0 = keyf((0,) * ring.nvars)
    order_idx = sorted(range(len(basis)), key=lambda i: keyf(leads[i]))
    kept: list[int] = []
    for i in order_idx:
        if not any(_divides(leads[j], leads[i]) for j in kept):
            kept.append(i)
    polys = [basis[i] for i in kept]
    lexps = [leads[i] for i in kept]
    for i in range(len(polys)):
        others = polys[:i] + polys[i + 1 :]
        olead = lexps[:i] + lexps[i + 1 :]
        r = _nf(polys[i], others, olead, field, keyf, key0)
        if not r or r[0][1] != lexps[i]:
            raise InternalInconsistency("interreduction destroyed a leading term")
        polys[i] = r
    return ReducedGB(ring, order, tuple(_to_poly(ring, t) for t in polys))


def normal_form(f: Polynomial, gb: ReducedGB) -> Polynomial:
    """Remainder of f on division by the reduced basis; unique since gb is reduced."""
    if f.ring != gb.ring:
        raise RingMismatch(f"{f.ring!r} != {gb.ring!r}")
    if not gb.basis or f.is_zero():
        return f
    keyf = gb.order.key
    key0 = keyf((0,) * gb.ring.nvars)
    field = gb.ring.field
    basis = [_internal(g, keyf) for g in gb.basis]
    r = _nf(_internal(f, keyf), basis, list(gb.lead_exponents), field, keyf, key0)
    return _to_poly(gb.ring, r)


def ideal_member(f: Polynomial, gb: ReducedGB) -> bool:
    """True iff f lies in the ideal presented by gb."""
    return normal_form(f, gb).is_zero()


def validate_reduced_gb(gb: ReducedGB) -> None:
    """Engine health check: reducedness, monicity, and the S-polynomial certificate."""
    field = gb.ring.field
    for i, g in enumerate(gb.basis):
        if g.leading_term(gb.order)[1] != field.one():
            raise InternalInconsistency(f"basis element {i} is not monic")
        for e, _ in g.terms:
            for j, le in enumerate(gb.lead_exponents):
                if j != i and _divides(le, e):
                    raise InternalInconsistency(
                        f"term of basis element {i} divisible by lead of {j}"
                    )
    for i in range(len(gb.basis)):
        for j in range(i + 1, len(gb.basis)):
            s = s_polynomial(gb.basis[i], gb.basis[j], gb.order)
            if not ideal_member(s, gb):
                raise InternalInconsistency(f"S-polynomial of pair ({i},{j}) does not reduce to 0")
