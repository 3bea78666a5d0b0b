from app.utils.helpers import catalan, render_table, render_record, render_polynomial, to_json_text
from app.utils.constants import TheoremId, OutputFormat, CodeKind, Bijection, GeneratingSet, GfFamily, FERRERS_THEOREMS

__all__ = [
    "catalan",
    "render_table",
    "render_record",
    "render_polynomial",
    "to_json_text",
    "TheoremId",
    "OutputFormat",
    "CodeKind",
    "Bijection",
    "GeneratingSet",
    "GfFamily",
    "FERRERS_THEOREMS",
]
