"""Finite categories enriched in a poset lattice.

A category here is a finite list of object labels plus a square hom matrix
with values in an enriching lattice.  Over the kbar lattice this is a
generalized metric space: distances may be negative, infinite and
asymmetric, the triangle inequality is the composition law, and the
identity law says d(a,a) is 0 or -inf.
"""

from dataclasses import dataclass
from itertools import product

from .scalars import ExtScalar, format_scalar
from .lattices import EnrichingLattice


@dataclass(frozen=True)
class VCategory:
    lattice: EnrichingLattice
    objects: tuple
    hom: tuple  # tuple of tuples of ExtScalar, hom[i][j] = Hom(objects[i], objects[j])

    def __post_init__(self):
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("object labels must be distinct")
        n = len(self.objects)
        if len(self.hom) != n or any(len(row) != n for row in self.hom):
            raise ValueError("hom matrix shape does not match the object list")
        object.__setattr__(self, "_pos", {a: i for i, a in enumerate(self.objects)})

    def hom_at(self, a, b):
        return self.hom[self._pos[a]][self._pos[b]]

    def has_object(self, a):
        return a in self._pos


def make_category(lattice, objects, hom_rows):
    return VCategory(lattice, tuple(objects), tuple(tuple(row) for row in hom_rows))


def validate_category(C):
    """List of violated-law descriptions; empty iff C is a category."""
    L = C.lattice
    bad = []
    for a in C.objects:
        if not L.leq(L.unit, C.hom_at(a, a)):
            bad.append("identity law fails at %s: unit %s is not below hom %s"
                       % (a, format_scalar(L.unit), format_scalar(C.hom_at(a, a))))
    for a in C.objects:
        for b in C.objects:
            for c in C.objects:
                lhs = L.tensor(C.hom_at(a, b), C.hom_at(b, c))
                rhs = C.hom_at(a, c)
                if not L.leq(lhs, rhs):
                    bad.append(
                        "composition law fails at (%s, %s, %s): %s is not below %s"
                        % (a, b, c, format_scalar(lhs), format_scalar(rhs)))
    return bad


def opposite(C):
    """Transpose the hom matrix."""
    n = len(C.objects)
    return VCategory(C.lattice, C.objects,
                     tuple(tuple(C.hom[j][i] for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class VFunctor:
    domain: VCategory
    codomain: VCategory
    object_map: tuple  # pairs (domain object, codomain object), in domain order

    def __post_init__(self):
        mapping = dict(self.object_map)
        if tuple(a for a, _ in self.object_map) != self.domain.objects:
            raise ValueError("object_map must cover the domain objects in order")
        for _, b in self.object_map:
            if not self.codomain.has_object(b):
                raise ValueError("object_map hits a label outside the codomain")
        object.__setattr__(self, "_map", mapping)

    def __call__(self, a):
        return self._map[a]


def make_functor(domain, codomain, mapping):
    return VFunctor(domain, codomain, tuple((a, mapping[a]) for a in domain.objects))


def identity_functor(C):
    return make_functor(C, C, {a: a for a in C.objects})


def is_functor(F):
    """The increasing condition: hom(a,a') below hom(F a, F a')."""
    A, B, L = F.domain, F.codomain, F.domain.lattice
    return all(L.leq(A.hom_at(a, a2), B.hom_at(F(a), F(a2)))
               for a in A.objects for a2 in A.objects)


def is_fully_faithful(F):
    A, B = F.domain, F.codomain
    return all(A.hom_at(a, a2) == B.hom_at(F(a), F(a2))
               for a in A.objects for a2 in A.objects)


def is_isomorphism(F):
    A, B = F.domain, F.codomain
    image = {F(a) for a in A.objects}
    return is_fully_faithful(F) and len(image) == len(A.objects) == len(B.objects)


def compose_functors(G, F):
    """G after F."""
    if F.codomain is not G.domain and F.codomain != G.domain:
        raise ValueError("codomain of the inner functor must be the outer domain")
    return make_functor(F.domain, G.codomain, {a: G(F(a)) for a in F.domain.objects})


def functor_hom(F, G):
    """Hom-value between parallel functors: inf over a of hom(F a, G a)."""
    _check_parallel(F, G)
    L = F.codomain.lattice
    return L.inf([F.codomain.hom_at(F(a), G(a)) for a in F.domain.objects])


def canonical_leq(F, G):
    """F below G iff unit is below hom(F a, G a) for every object a."""
    _check_parallel(F, G)
    B, L = F.codomain, F.codomain.lattice
    return all(L.leq(L.unit, B.hom_at(F(a), G(a))) for a in F.domain.objects)


def _check_parallel(F, G):
    if F.domain != G.domain or F.codomain != G.codomain:
        raise ValueError("functors are not parallel")


def enumerate_functors(A, B):
    """All functors A -> B, lexicographic in B's object order."""
    out = []
    for choice in product(B.objects, repeat=len(A.objects)):
        F = make_functor(A, B, dict(zip(A.objects, choice)))
        if is_functor(F):
            out.append(F)
    return out


def self_enrichment(L, carrier):
    """The lattice as a category over itself: hom is the internal hom."""
    carrier = list(carrier)
    labels = tuple(format_scalar(x) for x in carrier)
    if len(set(labels)) != len(labels):
        raise ValueError("carrier values must be distinct")
    hom = tuple(tuple(L.hom(x, y) for y in carrier) for x in carrier)
    return VCategory(L, labels, hom)


@dataclass(frozen=True)
class Presheaf:
    base: VCategory
    values: tuple  # pairs (object, ExtScalar) in base order

    def __post_init__(self):
        if tuple(a for a, _ in self.values) != self.base.objects:
            raise ValueError("presheaf values must cover the base objects in order")
        object.__setattr__(self, "_map", dict(self.values))

    def __call__(self, a):
        return self._map[a]


def make_presheaf(base, mapping):
    return Presheaf(base, tuple((a, mapping[a]) for a in base.objects))


def is_presheaf(p):
    """Contravariant nonexpansiveness: hom(a,b) below hom_L(p(b), p(a))."""
    C, L = p.base, p.base.lattice
    return all(L.leq(C.hom_at(a, b), L.hom(p(b), p(a)))
               for a in C.objects for b in C.objects)


def presheaf_dist(p1, p2):
    """Hom-value between presheaves: inf over a of hom_L(p1(a), p2(a))."""
    if p1.base != p2.base:
        raise ValueError("presheaves live over different bases")
    L = p1.base.lattice
    return L.inf([L.hom(p1(a), p2(a)) for a in p1.base.objects])


def yoneda(C, b):
    """The representable presheaf a |-> hom(a, b)."""
    return make_presheaf(C, {a: C.hom_at(a, b) for a in C.objects})


def co_yoneda(C, a):
    """The corepresentable b |-> hom(a, b), packaged over the opposite base."""
    Cop = opposite(C)
    return make_presheaf(Cop, {b: C.hom_at(a, b) for b in C.objects})


def verify_yoneda(C):
    """Both embeddings are isometries: hom values equal presheaf distances.

    Checks hom(b,b') = inf_a hom_L(hom(a,b), hom(a,b')) and the dual
    hom(a,a') = inf_b hom_L(hom(a',b), hom(a,b)) for every pair.
    """
    L = C.lattice
    for b in C.objects:
        for b2 in C.objects:
            expected = C.hom_at(b, b2)
            got = L.inf([L.hom(C.hom_at(a, b), C.hom_at(a, b2)) for a in C.objects])
            if got != expected:
                return False
    for a in C.objects:
        for a2 in C.objects:
            expected = C.hom_at(a, a2)
            got = L.inf([L.hom(C.hom_at(a2, b), C.hom_at(a, b)) for b in C.objects])
            if got != expected:
                return False
    return True
