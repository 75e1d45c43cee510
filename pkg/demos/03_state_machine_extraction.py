# Extract a state machine from a Java-like program graph and compare it with the golden result.

from gretl_mini import execute, export_dot, parse_transformation
from gretl_mini.case import FIXTURE_DIR, reference_transformation, run_case
from gretl_mini.case.fixtures import fixture_a

transformation = parse_transformation(reference_transformation())
print(len(transformation.imports), "imports,", len(transformation.statements), "statements")

ctx = execute(transformation, fixture_a())
for e in ctx.target.edges:
    print(e.source.get("name"), "->", e.target.get("name"), e.get("trigger"), e.get("action"))

# Traceability: each State came from one Class
for archetype, image in ctx.trace.img["State"].items():
    print(archetype.id, "->", image.id)

print(export_dot(ctx.target))

for name in "ABC":
    report = run_case(FIXTURE_DIR / f"{name}.manifest.json")
    print(report.summary(), f"{report.seconds:.3f}s")
