# A small schema with multiple inheritance, then a graph that conforms to it.

from gretl_mini import CONTAINMENT, Graph, Schema
from gretl_mini.errors import GretlError

schema = Schema("Library")
schema.add_vertex_class("lib.Item", is_abstract=True)
schema.add_vertex_class("lib.Book")
schema.add_vertex_class("lib.Shelf")
schema.add_specialization("lib.Book", "lib.Item")
schema.add_attribute("lib.Item", "title", "String")
schema.add_attribute("lib.Book", "pages", "Integer")
schema.add_edge_class("lib.Holds", "lib.Shelf", "lib.Item", to_role="items", kind=CONTAINMENT)

print(sorted(c.qualified_name for c in schema.vertex_classes))
print(sorted(schema.visible_attributes(schema.get_class("lib.Book"))))

# Instances
g = Graph(schema, "shelfA")
shelf = g.create_vertex("lib.Shelf")
book = g.create_vertex("lib.Book")
book.set("title", "Graphs")
book.set("pages", 312)
g.create_edge("lib.Holds", shelf, book)
print(len(g.vertices), len(g.edges), book.attributes())

# Items include Books through inheritance
print([v.id for v in g.vertices_of("lib.Item")])

# Type errors are reported, never coerced
try:
    book.set("pages", "many")
except GretlError as err:
    print(type(err).__name__, err)

g.validate()
print("valid")
