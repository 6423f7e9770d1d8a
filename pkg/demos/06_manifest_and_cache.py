"""Driving the engine from a manifest, with content-addressed caching.

The same machinery backs the `torusbt` command line:

    torusbt predict my_torus.ini --json report.json --cache-dir .cache
"""

import json
import tempfile

from torusbt import parse_manifest, run_manifest

MANIFEST = """
# the norm-one torus of Q(sqrt5)/Q, spelled out rather than taken
# from the fixture catalog
[group]
generators = [[1,0]]

[lattice]
rank = 1
action.g0 = [[-1]]

[realization]
modulus = 5
images = {2: 1}

[commands]
run = predict, wgroup, local-table

[options]
prime_cap = 20
"""

man = parse_manifest(MANIFEST)
with tempfile.TemporaryDirectory() as cache:
    report, hit = run_manifest(man, cache_dir=cache)
    print("first run, cache hit:", hit)
    print(json.dumps(report["commands"]["predict"], indent=2, sort_keys=True))
    print("wgroup:", json.dumps(report["commands"]["wgroup"], sort_keys=True))

    report2, hit = run_manifest(parse_manifest(MANIFEST), cache_dir=cache)
    print("second run, cache hit:", hit)
    same = {k: v for k, v in report.items() if k != "generated_at"} == \
           {k: v for k, v in report2.items() if k != "generated_at"}
    print("reports identical modulo timestamp:", same)
