"""Write the JSON inputs used by the other demos and the CLI walkthrough.

Run from the repository root:  python3 demos/make_data.py
"""

import json
from pathlib import Path

from stackytoric import catalog, io
from stackytoric.crossedmod import QuasiLattice
from stackytoric.abelian import FgAbelianGroup
from stackytoric.field import root
from stackytoric.fingroupoid.models import stabilized_model, translation_model
from stackytoric.linalg import Matrix

OUT = Path(__file__).parent / "data"


def write(name, doc):
    OUT.mkdir(exist_ok=True)
    (OUT / name).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print("wrote", OUT / name)


for key in ("quasi-interval", "rational-interval", "triangle", "square", "weighted-triangle"):
    write(f"{key}.json", io.stacky_to_json(catalog.CATALOG[key](), name=key))

# normals (1, 0) and (-1, 0) in R^2 do not span E
bad = io.stacky_to_json(catalog.rational_interval(), name="non-spanning")
bad["quasi_lattice"] = {"A": {"generators": 1, "relations": []}, "E_dim": 2,
                        "del": [[1], [0]]}
bad["polytope"] = {"normals": [[1, 0], [-1, 0]], "offsets": [0, -1]}
write("non-spanning.json", bad)

for model, name in ((translation_model(4, 2), "z4-z2"), (stabilized_model(2), "z2-trivial")):
    write(f"{name}.json", io.finite_to_json(model.cm, model.X, model.action, name=model.name))

# same data with a broken composition table
broken = io.finite_to_json(*(lambda m: (m.cm, m.X, m.action))(translation_model(4, 2)))
f, g, h = broken["groupoid"]["comp"][5]
broken["groupoid"]["comp"][5] = [f, g, (h + 1) % broken["groupoid"]["arrows"]]
write("broken-comp.json", broken)

r = root(2)
Q = QuasiLattice(FgAbelianGroup(2), 1, Matrix([[1, r]]))
Qs = QuasiLattice(FgAbelianGroup(2), 1, Matrix([[r, 1]]))
ql = io.quasilattice_to_json
write("morita-swap.json", {"schema": io.SCHEMA_ID, "field_d": 2, "source": ql(Q),
                           "target": ql(Qs),
                           "certificate": {"U": [[0, 1], [1, 0]], "T": [[1]]}})
write("morita-edim.json", {"schema": io.SCHEMA_ID, "field_d": 2, "source": ql(Q),
                           "target": ql(QuasiLattice.standard(2))})
# related by U = [[2, 1], [1, 1]]: no witness with entries of size 1
Qh = QuasiLattice(FgAbelianGroup(2), 1, Matrix([[1 - r, -1 + 2 * r]]))
write("morita-hard.json", {"schema": io.SCHEMA_ID, "field_d": 2, "source": ql(Q),
                           "target": ql(Qh)})
