from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..linalg import Mat, block_diag, hstack, image_basis, kernel_basis, left_inverse, right_inverse, vstack
from .Module import Module
from .ModuleMap import ModuleMap, identity_map, zero_map
from .hom import factor_before, factor_through


@dataclass(frozen=True)
class Factorization:
    """The canonical factorization of f: M -> N

    Attributes:
      kernel: ModuleMap: The inclusion ker f -> M
      image: Module: The image of f
      coimage: ModuleMap: The surjection M -> im f
      mono: ModuleMap: The inclusion im f -> N
      cokernel: ModuleMap: The surjection N -> coker f
    """
    kernel: ModuleMap
    image: Module
    coimage: ModuleMap
    mono: ModuleMap
    cokernel: ModuleMap


def _sub_representation(M: Module, bases: Sequence[Mat], name: str | None = None) -> ModuleMap:
    """The inclusion of the submodule spanned vertex-wise by the columns of bases"""
    mats = []
    for k, arrow in enumerate(M.algebra.quiver.arrows):
        source_basis, target_basis = bases[arrow.source], bases[arrow.target]
        if target_basis.cols == 0 or source_basis.cols == 0:
            mats.append(Mat.zeros(M.field, target_basis.cols, source_basis.cols))
            continue
        mats.append(left_inverse(target_basis) @ M.arrow_mats[k] @ source_basis)
    sub = Module(M.algebra, [b.cols for b in bases], mats, name=name, check=False)
    return ModuleMap(sub, M, bases, check=False)


def _quotient_representation(N: Module, projections: Sequence[Mat], name: str | None = None) -> ModuleMap:
    """The quotient N -> Q given vertex-wise surjections whose kernels form a submodule"""
    mats = []
    for k, arrow in enumerate(N.algebra.quiver.arrows):
        source_proj, target_proj = projections[arrow.source], projections[arrow.target]
        if source_proj.rows == 0 or target_proj.rows == 0:
            mats.append(Mat.zeros(N.field, target_proj.rows, source_proj.rows))
            continue
        mats.append(target_proj @ N.arrow_mats[k] @ right_inverse(source_proj))
    quotient = Module(N.algebra, [q.rows for q in projections], mats, name=name, check=False)
    return ModuleMap(N, quotient, projections, check=False)


def submodule(M: Module, bases: Sequence[Mat], name: str | None = None) -> ModuleMap:
    """The inclusion of a submodule given by independent spanning columns per vertex

    Raises:
      ValueError: If the spans are not closed under the arrow action
    """
    inclusion = _sub_representation(M, bases, name)
    inclusion.validate()
    return inclusion


def map_factorization(f: ModuleMap) -> Factorization:
    """Kernel, image and cokernel of f, assembled vertex-wise

    Args:
      f: ModuleMap: The map

    Returns:
      Factorization: The kernel inclusion, the image with its two maps and the cokernel projection
    """
    M, N = f.source, f.target
    kernel = _sub_representation(M, [kernel_basis(m) for m in f.vertex_mats])
    image_bases = [image_basis(m) for m in f.vertex_mats]
    mono = _sub_representation(N, image_bases)
    coimage = ModuleMap(
        M, mono.source,
        [left_inverse(b) @ m if b.cols else Mat.zeros(f.field, 0, m.cols) for b, m in zip(image_bases, f.vertex_mats)],
        check=False)
    cokernel = _quotient_representation(N, [kernel_basis(m.T).T for m in f.vertex_mats])
    return Factorization(kernel, mono.source, coimage, mono, cokernel)


def kernel(f: ModuleMap) -> ModuleMap:
    return map_factorization(f).kernel


def cokernel(f: ModuleMap) -> ModuleMap:
    return map_factorization(f).cokernel


@dataclass(frozen=True)
class DirectSum:
    """A direct sum with its structure maps

    Attributes:
      module: Module: The sum
      summands: tuple[Module, ...]: The summands in order
      injections: tuple[ModuleMap, ...]: Summand k -> sum
      projections: tuple[ModuleMap, ...]: Sum -> summand k
    """
    module: Module
    summands: tuple[Module, ...]
    injections: tuple[ModuleMap, ...]
    projections: tuple[ModuleMap, ...]


def direct_sum(modules: Sequence[Module], algebra=None, name: str | None = None) -> DirectSum:
    """Block-diagonal direct sum

    Args:
      modules: Sequence[Module]: The summands
      algebra: (Default value = None)
        The algebra, needed only when modules is empty
      name: str | None: (Default value = None)
        A display name for the sum

    Returns:
      DirectSum: The sum with injections and projections, pi_i∘iota_j = delta_ij
    """
    modules = tuple(modules)
    if not modules:
        if algebra is None:
            raise ValueError("the empty direct sum needs an algebra")
        return DirectSum(Module.zero(algebra), (), (), ())
    algebra = modules[0].algebra
    if any(m.algebra is not algebra for m in modules):
        raise ValueError("summands are modules over different algebras")
    field = algebra.field
    if len(modules) == 1 and name is None:
        only = modules[0]
        return DirectSum(only, modules, (identity_map(only),), (identity_map(only),))
    dims = [sum(m.dim_vector[v] for m in modules) for v in range(algebra.vertex_count)]
    mats = [block_diag(field, [m.arrow_mats[k] for m in modules]) for k in range(algebra.arrow_count)]
    if name is None:
        name = " ⊕ ".join(m.label for m in modules)
    total = Module(algebra, dims, mats, name=name, check=False)
    injections, projections = [], []
    offsets = [0] * algebra.vertex_count
    for m in modules:
        inj, proj = [], []
        for v in range(algebra.vertex_count):
            eye = Mat.identity(field, dims[v])
            columns = list(range(offsets[v], offsets[v] + m.dim_vector[v]))
            inj.append(eye.take_columns(columns))
            proj.append(eye.take_rows(columns))
            offsets[v] += m.dim_vector[v]
        injections.append(ModuleMap(m, total, inj, check=False))
        projections.append(ModuleMap(total, m, proj, check=False))
    return DirectSum(total, modules, tuple(injections), tuple(projections))


def block_map(
        source: DirectSum,
        target: DirectSum,
        blocks: Sequence[Sequence[ModuleMap | None]],
) -> ModuleMap:
    """The map between direct sums with components blocks[i][j]: source_j -> target_i

    None entries are zero. The result equals the sum of
    target.injections[i] ∘ blocks[i][j] ∘ source.projections[j].
    """
    field = source.module.field
    vertex_count = source.module.algebra.vertex_count
    mats = []
    for v in range(vertex_count):
        rows = []
        for i, t in enumerate(target.summands):
            row = []
            for j, s in enumerate(source.summands):
                component = blocks[i][j]
                if component is None:
                    row.append(Mat.zeros(field, t.dim_vector[v], s.dim_vector[v]))
                else:
                    if component.source is not s or component.target is not t:
                        raise ValueError(f"block ({i}, {j}) is not a map {s.label} -> {t.label}")
                    row.append(component.vertex_mats[v])
            rows.append(hstack(field, row, t.dim_vector[v]))
        mats.append(vstack(field, rows, source.module.dim_vector[v]))
    return ModuleMap(source.module, target.module, mats, check=False)


def column_map(target: DirectSum, components: Sequence[ModuleMap], source: Module) -> ModuleMap:
    """The map source -> ⊕ targets with the given components"""
    result = zero_map(source, target.module)
    for inj, component in zip(target.injections, components):
        result = result + inj @ component
    return result


def row_map(source: DirectSum, components: Sequence[ModuleMap], target: Module) -> ModuleMap:
    """The map ⊕ sources -> target with the given components"""
    result = zero_map(source.module, target)
    for proj, component in zip(source.projections, components):
        result = result + component @ proj
    return result


@dataclass(frozen=True)
class Square:
    """A pushout or pullback object with its two legs

    Attributes:
      module: Module: The pushout or pullback P
      first: ModuleMap: The leg at the first map
      second: ModuleMap: The leg at the second map
      parts: DirectSum: The sum B ⊕ C the square is built from
      universal: ModuleMap: B ⊕ C -> P for a pushout, P -> B ⊕ C for a pullback
    """
    module: Module
    first: ModuleMap
    second: ModuleMap
    parts: DirectSum
    universal: ModuleMap

    def descend(self: Square, a: ModuleMap, b: ModuleMap) -> ModuleMap:
        """The map h: P -> Z out of a pushout with h∘first = a and h∘second = b

        Raises:
          ValueError: If a and b do not agree on the common source
        """
        h = factor_before(row_map(self.parts, [a, b], a.target), self.universal)
        if h is None:
            raise ValueError("maps do not agree on the pushout diagram")
        return h

    def lift(self: Square, a: ModuleMap, b: ModuleMap) -> ModuleMap:
        """The map h: Z -> P into a pullback with first∘h = a and second∘h = b

        Raises:
          ValueError: If a and b do not agree on the common target
        """
        h = factor_through(column_map(self.parts, [a, b], a.source), self.universal)
        if h is None:
            raise ValueError("maps do not agree on the pullback diagram")
        return h


def pushout(f: ModuleMap, g: ModuleMap) -> Square:
    """Pushout of f: A -> B and g: A -> C, as the cokernel of (f, -g): A -> B ⊕ C

    Returns:
      Square: The pushout with legs B -> P and C -> P
    """
    if f.source is not g.source:
        raise ValueError("pushout needs maps with a common source")
    both = direct_sum([f.target, g.target], name=f"{f.target.label} ⊕ {g.target.label}")
    alpha = column_map(both, [f, -g], f.source)
    projection = map_factorization(alpha).cokernel
    return Square(projection.target, projection @ both.injections[0], projection @ both.injections[1], both,
                  projection)


def pullback(f: ModuleMap, g: ModuleMap) -> Square:
    """Pullback of f: B -> D and g: C -> D, as the kernel of (f, -g): B ⊕ C -> D

    Returns:
      Square: The pullback with legs P -> B and P -> C
    """
    if f.target is not g.target:
        raise ValueError("pullback needs maps with a common target")
    both = direct_sum([f.source, g.source], name=f"{f.source.label} ⊕ {g.source.label}")
    beta = row_map(both, [f, -g], f.target)
    inclusion = map_factorization(beta).kernel
    return Square(inclusion.source, both.projections[0] @ inclusion, both.projections[1] @ inclusion, both,
                  inclusion)


def splitting_projections(inclusions: Sequence[ModuleMap]) -> list[ModuleMap]:
    """Projections for inclusions whose images form a direct sum decomposition of their target"""
    target = inclusions[0].target
    field = target.field
    per_vertex = []
    for v in range(target.algebra.vertex_count):
        combined = hstack(field, [i.vertex_mats[v] for i in inclusions], target.dim_vector[v])
        inverse = left_inverse(combined) if combined.cols else Mat.zeros(field, 0, target.dim_vector[v])
        per_vertex.append(inverse)
    projections = []
    offsets = [0] * target.algebra.vertex_count
    for inc in inclusions:
        mats = []
        for v in range(target.algebra.vertex_count):
            d = inc.source.dim_vector[v]
            mats.append(per_vertex[v].take_rows(range(offsets[v], offsets[v] + d)))
            offsets[v] += d
        projections.append(ModuleMap(target, inc.source, mats, check=False))
    return projections


def radical_bases(M: Module) -> list[Mat]:
    """Per vertex, a basis of (rad M)_j, the sum of the images of the arrows into j"""
    field = M.field
    bases = []
    for j in range(M.algebra.vertex_count):
        incoming = [M.arrow_mats[a] for a in M.algebra.quiver.arrows_to(j)]
        bases.append(image_basis(hstack(field, incoming, M.dim_vector[j])))
    return bases


def socle_bases(M: Module) -> list[Mat]:
    """Per vertex, a basis of (soc M)_j, the common kernel of the arrows out of j"""
    field = M.field
    bases = []
    for j in range(M.algebra.vertex_count):
        outgoing = [M.arrow_mats[a] for a in M.algebra.quiver.arrows_from(j)]
        bases.append(kernel_basis(vstack(field, outgoing, M.dim_vector[j])))
    return bases
