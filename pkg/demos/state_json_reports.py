"""Round-tripping states through the JSON schema and reading bound reports.

The same schema drives the CLI; this shows the library side: build states,
serialize, reload, and evaluate reports.  Equivalent commands:

    urbounds report --state ground.json --obs x,p
    urbounds example --a 1 --c 1 --b-re 0.5 --b-im 0.5

Run:
    python3 demos/state_json_reports.py
"""

import json

from urbounds import (
    bound_report,
    make_fock_mixture,
    make_thermal,
    resolve_observable,
    state_from_dict,
    state_to_dict,
)

ground = {"type": "gaussian", "hbar": 1.0, "mean": [0.0, 0.0], "cov": [[0.5, 0.0], [0.0, 0.5]]}
entangled = {"type": "entangled_gaussian", "a": 1.0, "c": 1.0, "b_re": 0.5, "b_im": 0.5}
mixture = {"type": "fock_mixture", "probs": [0.6, 0.3, 0.1]}

for name, obj in (("ground", ground), ("entangled", entangled), ("fock mixture", mixture)):
    state = state_from_dict(obj)
    labels = ("x", "p", "y") if name == "entangled" else ("x", "p")
    obs = [resolve_observable(state, label) for label in labels]
    report = bound_report(state, *obs)
    print(f"{name} state (observables {','.join(labels)}):")
    print(f"  product {report.product:.9f}  best bound {report.best_bound:.9f}  "
          f"slack {report.slack:.3e}")

print()
print("serialization round trip keeps the physics:")
thermal = make_thermal(1.0, 1.0)
again = state_from_dict(state_to_dict(thermal))
print("  thermal cov:", json.dumps(state_to_dict(again)["cov"]))

diag = make_fock_mixture([0.5, 0.5])
print("  fock mixture dict:", json.dumps(state_to_dict(diag)))
