"""
Reproducible CLI runs
=====================

The same plan and seed always produce byte-identical artifacts.
"""
import hashlib
import tempfile
from pathlib import Path

from arbor.cli import main

with tempfile.TemporaryDirectory() as tmp:
    digests = []
    for rep in range(2):
        out = Path(tmp) / f"fd{rep}.json"
        main(["decompose", "--family", "random_forest_union", "--n", "120", "--k", "6", "--eps", "1/2",
              "--a-bound", "6", "--seed", "7", "-o", str(out)])
        digests.append(hashlib.sha256(out.read_bytes()).hexdigest())
    print(digests[0][:16], digests[1][:16], "identical:", digests[0] == digests[1])
