#!/usr/bin/env python3
"""Config-file batch processing, report formats and exit codes.

Writes a few configuration documents to a scratch directory, then runs the
same entry points the `vancoh` command uses: one report per file, reports
in input order, exit status 0/1/2 for clean/invalid/defect.
"""

import json
import shutil
import tempfile
from pathlib import Path

from vancoh.cli import run
from vancoh.corpus import bundled
from vancoh.report import render_json, render_text

scratch = Path(tempfile.mkdtemp(prefix="vancoh-demo-"))

# A valid file straight from the corpus.
good = scratch / "three_planes.json"
shutil.copyfile(str(dict(bundled())["xyz"]), good)

# An invalid one: a determinant-2 loop monodromy is not an automorphism.
doc = json.loads(good.read_text())
doc["components"][0]["loop_monodromies"] = [[[2]]]
bad = scratch / "not_an_automorphism.json"
bad.write_text(json.dumps(doc, indent=2))

# And one that is not even JSON.
broken = scratch / "broken.json"
broken.write_text("{this is not json")

reports, status = run([str(good), str(bad), str(broken)])
print(f"batch of 3 files -> exit status {status} (1: validation failures present)")
for r in reports:
    print("-" * 60)
    print(render_text(r), end="")
print("-" * 60)
print()

# The machine-readable form is byte-deterministic: the same input bytes
# give the same serialized report, wherever the file lives.
copy = scratch / "renamed_copy.json"
shutil.copyfile(good, copy)
reports2, _ = run([str(copy)])
same = render_json([reports[0]]) == render_json([reports2[0]])
print("byte-identical reports for byte-identical inputs:", same)
print()

first = json.loads(render_json([reports[0]]))[0]
print("lowest group from the JSON report:",
      first["vanishing"]["lowest_group"]["text"])
print("provenance:", first["provenance"])

shutil.rmtree(scratch)
