import json
from typing import Any, Dict, List

import pandas as pd


class ReportService:
    """Renders command results as JSON documents or text tables"""

    def to_json(self, payload: Dict[str, Any]) -> str:
        return json.dumps(payload, indent=2, sort_keys=True)

    def records_table(self, records: List[Dict[str, Any]]) -> pd.DataFrame:
        """One row per record; nested values are flattened to JSON text"""
        columns = sorted({k for r in records for k in r})
        rows = [{k: v if not isinstance(v, (dict, list)) else json.dumps(v, sort_keys=True)
                 for k, v in r.items()} for r in records]
        return pd.DataFrame(rows, columns=columns)

    def list_table(self, values: List[str], label: str) -> pd.DataFrame:
        return pd.DataFrame({label: list(values)})

    def graded_table(self, by_degree: Dict[str, List[str]]) -> pd.DataFrame:
        rows = [{'degree': int(d), 'dimension': len(basis), 'basis': '; '.join(basis)}
                for d, basis in sorted(by_degree.items(), key=lambda kv: int(kv[0]))]
        return pd.DataFrame(rows, columns=['degree', 'dimension', 'basis'])

    def text(self, payload: Dict[str, Any]) -> str:
        """Scalars as key: value lines; lists and graded dicts as tables"""
        lines = []
        tables = []
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
                tables.append(f"{key}:\n" + self._render(self.records_table(value)))
            elif isinstance(value, list) and value and all(isinstance(v, str) for v in value):
                tables.append(self._render(self.list_table(value, key)))
            elif isinstance(value, dict) and value and all(isinstance(v, list) for v in value.values()) \
                    and all(k.isdigit() for k in value):
                tables.append(f"{key}:\n" + self._render(self.graded_table(value)))
            elif isinstance(value, (dict, list)):
                lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
            else:
                lines.append(f"{key}: {value}")
        return "\n\n".join(["\n".join(lines)] + tables)

    @staticmethod
    def _render(df: pd.DataFrame) -> str:
        return df.to_string(index=False)
