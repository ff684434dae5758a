# Copyright 2026 The kvstream Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs `kvstream report --format json` twice and checks the output against
the published JSON Schema."""

import json
import subprocess
import sys

import jsonschema


def main():
    cli, data, schema_path = sys.argv[1:4]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    docs = []
    for _ in range(2):
        out = subprocess.run([cli, "report", "--data", data, "--format", "json"],
                             check=True, capture_output=True, text=True).stdout
        doc = json.loads(out)
        jsonschema.validate(doc, schema)
        doc.pop("generated_at")
        docs.append(json.dumps(doc, sort_keys=True))
    if docs[0] != docs[1]:
        print("report differs between runs")
        return 1
    print("report valid against", schema_path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
