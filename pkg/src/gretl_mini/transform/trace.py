"""Archetype/image trace maps, one pair per target class."""

from ..errors import DuplicateArchetype, UnknownArchetype, UnknownTraceMap
from ..values import VMap, render, value_key


class TraceMaps:
    def __init__(self):
        self.img = {}   # class simple name -> VMap(archetype -> element)
        self.arch = {}  # class simple name -> {element: archetype}

    def add_class(self, name):
        self.img.setdefault(name, VMap())
        self.arch.setdefault(name, {})

    def images(self, name):
        try:
            return self.img[name]
        except KeyError:
            raise UnknownTraceMap(f"no trace map for class {name}") from None

    def record(self, name, archetype, element):
        img = self.images(name)
        if archetype in img:
            raise DuplicateArchetype(f"archetype {render(archetype)} already has an image in {name}")
        img[archetype] = element
        self.arch[name][element] = archetype

    def image(self, name, archetype):
        img = self.images(name)
        if archetype not in img:
            raise UnknownArchetype(f"{render(archetype)} is not an archetype of {name}")
        return img[archetype]

    def archetype(self, name, element):
        return self.arch[name][element]

    def env_images(self):
        """Trace maps under their reserved query names (``img_State`` ...)."""
        return {f"img_{name}": img for name, img in self.img.items()}

    def is_bijective(self):
        for name, img in self.img.items():
            arch = self.arch[name]
            if len(img) != len(arch):
                return False
            for a, el in img.items():
                if arch.get(el) is None or value_key(arch[el]) != value_key(a):
                    return False
        return True

    def __repr__(self):
        sizes = ", ".join(f"{n}: {len(m)}" for n, m in self.img.items())
        return f"TraceMaps({sizes})"
