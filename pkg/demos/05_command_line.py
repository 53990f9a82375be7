# coding: utf-8

# # Files and the command line
#
# Datasets are JSON files with exact components written as strings like
# "-1/2+1/2r", where r is the square root of sqrt_m. The `sylgal` command
# reads them and writes JSON reports. Here the entry point is called in
# process.

# In[1]:

import json
import tempfile
from pathlib import Path

from sylgal.cli import main
from sylgal.configs import gen_hesse
from sylgal.dataset import dumps_points, loads_points

text = dumps_points(gen_hesse())
print(text)
assert dumps_points(loads_points(text)) == text


# In[2]:

tmp = Path(tempfile.mkdtemp())
(tmp / "hesse.json").write_text(text)
code = main(["check-sg", str(tmp / "hesse.json"), "-o", str(tmp / "report.json")])
report = json.loads((tmp / "report.json").read_text())
print("exit code", code, "verdict", report["verdict"], "witness count", report["witness"]["count"])


# Exit codes: 0 pass, 1 fail, 2 hypothesis violation, 3 unreadable input.

# In[3]:

(tmp / "broken.json").write_text('{"field": "C",')
print("exit code", main(["enumerate", str(tmp / "broken.json")]))

print("exit code", main(["grid", "--gen", "random_grid", "--a", "10", "--b", "10", "--seed", "7",
                         "-o", str(tmp / "grid.json")]))
print(json.loads((tmp / "grid.json").read_text())["witness_count"])
