# Queries and regular path expressions over the first case study fixture.

from gretl_mini import run_query
from gretl_mini.case.fixtures import fixture_a

graph = fixture_a()
imports = ["classifiers", "members"]

# All class names
print(run_query("from c: V{Class} reportSet c.name end", graph, imports))

# Which classes declare no methods, as a map
q = "from c: V{Class} reportMap c.name -> isEmpty(c <>--{members}) end"
print(run_query(q, graph, imports))

# Transitive containment with a restriction on the reached vertex
q = 'from c: V{Class}, m: c (<>--)+ & {Method} with c.name = "Locked" reportSet m.name end'
print(run_query(q, graph, imports))

# The existence form yields a boolean
q = 'from c: V{Class}, m: V{Method} with c.name = "Locked" reportSet c <>-- m end'
print(run_query(q, graph, imports))

# Key conflicts in a map are errors
try:
    run_query("from c: V{Class} reportMap 1 -> c.name end", graph, imports)
except Exception as err:
    print(type(err).__name__)
