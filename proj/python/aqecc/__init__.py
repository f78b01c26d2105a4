"""Asymmetric quantum code workbench: CSS derivations over exact finite
fields, code-family constructors, and brute-force distance oracles."""

try:
    from ._aqecc import *  # noqa: F401,F403
    from ._aqecc import __doc__ as _core_doc
except ImportError:  # in-tree builds put the extension next to the package
    from _aqecc import *  # noqa: F401,F403
    from _aqecc import __doc__ as _core_doc

__all__ = [
    "Field", "Basis", "Code", "Pair", "Additive",
    "direct_sum", "uuv", "relative_min_weight",
    "expand_aqecc", "direct_sum_aqecc", "puncture_aqecc", "extend_aqecc",
    "uuv_aqecc", "css_to_additive", "expand_additive_aqecc",
    "puncture_additive_aqecc",
    "grm", "character_code", "bch", "qr",
    "grm_aqecc", "character_aqecc", "bch_nested_aqecc", "bch_abch1_aqecc",
    "qr_aqecc",
    "table", "table_families", "verify", "verify_suites",
]
