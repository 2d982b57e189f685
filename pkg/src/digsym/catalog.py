"""Bundled group catalogs and the group / spec JSON file formats.

Group file: {"name": str, "degree": int, "generators": [cycle strings]}.
Catalog entries are curated data; the primitive catalog is re-verified
(transitivity and primitivity) by the engine at load time rather than
trusted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .blocks import is_primitive
from .errors import CosetSpecError, DigsymError
from .group import PermutationGroup, SubgroupHandle
from .perm import Permutation, parse_permutation


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    degree: int
    generator_text: tuple
    group: PermutationGroup


class CatalogFormatError(DigsymError, ValueError):
    pass


def group_from_dict(data: dict) -> CatalogEntry:
    try:
        name = data["name"]
        degree = int(data["degree"])
        gen_text = list(data["generators"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogFormatError(f"bad group record: {exc}") from exc
    gens = [parse_permutation(t, degree) for t in gen_text]
    group = PermutationGroup(gens)
    return CatalogEntry(name=name, degree=degree,
                        generator_text=tuple(gen_text), group=group)


def load_group_file(path) -> CatalogEntry:
    with open(path, "r", encoding="utf-8") as fh:
        return group_from_dict(json.load(fh))


def group_to_dict(name: str, group: PermutationGroup) -> dict:
    return {
        "name": name,
        "degree": group.degree,
        "generators": [g.cycle_string() for g in group.generators],
    }


def _catalog_dir(kind: str):
    return resources.files("digsym").joinpath("catalog").joinpath(kind)


def catalog_names(kind: str) -> list:
    """Sorted entry names of a bundled catalog ('small', 'primitive', 'special')."""
    root = _catalog_dir(kind)
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_catalog(kind: str, verify: bool = True) -> list:
    """All entries of a bundled catalog, in sorted name order.

    Primitive-catalog entries are re-verified: the loaded group must be
    transitive and primitive on its points.
    """
    root = _catalog_dir(kind)
    entries = []
    for name in catalog_names(kind):
        data = json.loads(root.joinpath(name + ".json").read_text("utf-8"))
        entry = group_from_dict(data)
        if verify and kind == "primitive":
            if not entry.group.is_transitive():
                raise CatalogFormatError(f"catalog entry {name} is not transitive")
            if not is_primitive(entry.group):
                raise CatalogFormatError(f"catalog entry {name} is not primitive")
        entries.append(entry)
    return entries


def load_catalog_entry(kind: str, name: str) -> CatalogEntry:
    root = _catalog_dir(kind)
    data = json.loads(root.joinpath(name + ".json").read_text("utf-8"))
    return group_from_dict(data)


def coset_spec_from_dict(data: dict, base_dir=None):
    """Load {"group": path-or-record, "subgroup_gens": [...], "g": cycle}.

    Returns a CosetDigraphSpec; validity is checked by the constructor's
    user (build_coset_digraph), not here.
    """
    from .construct import CosetDigraphSpec
    import os

    grp = data.get("group")
    if isinstance(grp, str):
        path = grp if base_dir is None else os.path.join(base_dir, grp)
        entry = load_group_file(path)
    elif isinstance(grp, dict):
        entry = group_from_dict(grp)
    else:
        raise CosetSpecError("spec needs a 'group' reference or record")
    G = entry.group
    try:
        sub_text = list(data["subgroup_gens"])
        g_text = data["g"]
    except KeyError as exc:
        raise CosetSpecError(f"spec missing field: {exc}") from exc
    sub_gens = [parse_permutation(t, G.degree) for t in sub_text]
    if sub_gens:
        H = SubgroupHandle(G, sub_gens)
    else:
        from .group import trivial_subgroup
        H = trivial_subgroup(G)
    g = parse_permutation(g_text, G.degree)
    return CosetDigraphSpec(G=G, H=H, g=g)


def load_coset_spec_file(path):
    import os
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return coset_spec_from_dict(data, base_dir=os.path.dirname(os.path.abspath(path)))
