import json
import math

import pandas as pd


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def to_json_text(data) -> str:
    return json.dumps(data, indent=2)


def render_table(df: pd.DataFrame, fmt: str) -> str:
    """Render a table in one of the output formats (json, csv, text, latex)."""
    if fmt == "json":
        return to_json_text(df.to_dict(orient="records"))
    if fmt == "csv":
        return df.to_csv(index=False).rstrip("\n")
    if fmt == "latex":
        return df.to_latex(index=False).rstrip("\n")
    if df.empty:
        return ""
    return df.to_string(index=False)


def _flatten(record: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        elif isinstance(value, (list, tuple)):
            flat[name] = ";".join(
                "^".join(str(part) for part in item) if isinstance(item, (list, tuple)) else str(item)
                for item in value
            )
        else:
            flat[name] = value
    return flat


def render_record(record: dict, fmt: str) -> str:
    """Render one nested record; nested keys are flattened with dots outside json."""
    if fmt == "json":
        return to_json_text(record)
    flat = _flatten(record)
    if fmt == "csv":
        return pd.DataFrame([flat]).to_csv(index=False).rstrip("\n")
    if fmt == "latex":
        table = pd.DataFrame({"statistic": list(flat), "value": [str(v) for v in flat.values()]})
        return table.to_latex(index=False).rstrip("\n")
    return "\n".join(f"{key}: {value}" for key, value in flat.items())


def render_polynomial(poly, fmt: str) -> str:
    if fmt == "json":
        return to_json_text(poly.to_json())
    if fmt == "latex":
        return poly.to_latex()
    if fmt == "csv":
        rows = [{"coeff": term["coeff"], **term["exps"]} for term in poly.to_json()]
        return pd.DataFrame(rows).fillna(0).to_csv(index=False).rstrip("\n")
    return poly.to_text()
