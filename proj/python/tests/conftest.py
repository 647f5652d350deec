import json
import os
import pathlib
import sys

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

# ctest points PYTHONPATH at the in-tree build; bypass an editable install's redirect
if os.environ.get("HOLO_INPLACE"):
    sys.meta_path[:] = [f for f in sys.meta_path if not type(f).__module__.startswith("_editable_skbc_holo")]

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "schemas"


@pytest.fixture(scope="session")
def validate():
    docs = {p.name: json.loads(p.read_text()) for p in SCHEMAS.glob("*.schema.json")}
    registry = Registry().with_resources((name, Resource.from_contents(doc)) for name, doc in docs.items())

    def check(instance, schema_name):
        Draft202012Validator(docs[schema_name], registry=registry).validate(instance)
        return instance

    return check
