import json
import logging
import os
from typing import Any, Dict, List, Optional

import pandas as pd

from algebra.field import build_field
from algebra.upoly import UPoly
from config import FIXTURE_DIR
from errors import FieldError, RepresentationError, SchemaError
from representation.garep import Representation

REQUIRED_KEYS = ('p', 'n', 'q')


class FixtureService:
    def __init__(self, fixture_dir: str = FIXTURE_DIR):
        self.fixture_dir = fixture_dir
        self.logger = logging.getLogger('FixtureService')

    def list_fixtures(self) -> List[str]:
        """Names of the shipped representation files"""
        if not os.path.isdir(self.fixture_dir):
            return []
        return sorted(f[:-5] for f in os.listdir(self.fixture_dir) if f.endswith('.json'))

    def resolve(self, name_or_path: str) -> str:
        if os.path.exists(name_or_path):
            return name_or_path
        candidate = os.path.join(self.fixture_dir, f"{name_or_path}.json")
        if os.path.exists(candidate):
            return candidate
        raise SchemaError(f"no representation file or fixture named {name_or_path!r}")

    def load(self, name_or_path: str) -> Representation:
        path = self.resolve(name_or_path)
        try:
            with open(path) as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: invalid JSON ({exc})")
        default_name = os.path.splitext(os.path.basename(path))[0]
        rep = self.parse(data, default_name)
        self.logger.info(f"Loaded {rep!r} from {path}")
        return rep

    def parse(self, data: Dict[str, Any], default_name: str = "") -> Representation:
        """Build a Representation from the fixture schema
        {p, field_degree?, modulus?, n, q: {"i,j": [coefficients]}}"""
        if not isinstance(data, dict):
            raise SchemaError("a representation file must hold a JSON object")
        missing = [k for k in REQUIRED_KEYS if k not in data]
        if missing:
            raise SchemaError(f"missing keys {missing}")
        try:
            field = build_field(int(data['p']), int(data.get('field_degree', 1)), data.get('modulus'))
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"bad field description: {exc}")
        except FieldError as exc:
            raise SchemaError(str(exc))
        if not isinstance(data['q'], dict):
            raise SchemaError("'q' must map \"i,j\" to coefficient lists")

        q: Dict = {}
        for key, coeffs in data['q'].items():
            try:
                i, j = (int(part) for part in key.split(','))
            except ValueError:
                raise SchemaError(f"entry key {key!r} is not of the form \"i,j\"")
            if not isinstance(coeffs, list):
                raise SchemaError(f"entry {key} must be a coefficient list")
            try:
                q[(i, j)] = UPoly(field, [field.from_json(c) for c in coeffs])
            except (TypeError, ValueError, FieldError) as exc:
                raise SchemaError(f"entry {key}: {exc}")
        try:
            return Representation(field, int(data['n']), q, data.get('name', default_name))
        except RepresentationError as exc:
            raise SchemaError(str(exc))

    def dump(self, rep: Representation) -> Dict[str, Any]:
        data = rep.to_json()
        if rep.name:
            data['name'] = rep.name
        return data

    def save(self, rep: Representation, path: str) -> None:
        with open(path, 'w') as fh:
            json.dump(self.dump(rep), fh, indent=2, sort_keys=True)
            fh.write('\n')

    def corpus(self) -> Dict[str, Representation]:
        return {name: self.load(name) for name in self.list_fixtures()}

    def summary(self, names: Optional[List[str]] = None) -> pd.DataFrame:
        """One row per fixture: field, dimension, entry count and top t-degree"""
        rows = []
        for name in names or self.list_fixtures():
            rep = self.load(name)
            rows.append({
                'fixture': name,
                'field': f"F_{rep.field.q}",
                'n': rep.n,
                'entries': len(rep.q),
                'max_t_degree': rep.max_t_degree()
            })
        return pd.DataFrame(rows, columns=['fixture', 'field', 'n', 'entries', 'max_t_degree'])
