"""Parses every .dot file in a directory; exit 77 when pydot is missing."""
import pathlib
import sys

try:
    import pydot
except ImportError:
    sys.exit(77)

files = sorted(pathlib.Path(sys.argv[1]).glob("*.dot"))
if not files:
    sys.exit("no dot files")
for path in files:
    graphs = pydot.graph_from_dot_file(str(path))
    if not graphs or len(graphs) != 1:
        sys.exit(f"{path}: not a single graph")
    g = graphs[0]
    if g.get_type() != "graph" or not g.get_edges():
        sys.exit(f"{path}: unexpected structure")
print(f"{len(files)} files parsed")
