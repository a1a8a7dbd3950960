# Certificates: write, re-read and audit a solver result.
import tempfile
from pathlib import Path

from cubestar import min_edge_dominating, verify_certificate
from cubestar.cli_io import export_dimacs, load_document, write_subgraph

res = min_edge_dominating(4)
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "q4.json"
    write_subgraph(res.witness, path, {"claimed_free": "true", "claimed_optimal": "true"})
    print(path.read_text())
    doc = load_document(path)
    print("audit:", verify_certificate(doc.to_certificate()))
    print(export_dimacs(doc.to_subgraph()).splitlines()[0])
