"""Fermion-to-qubit mappings on the square-lattice torus.

Thin wrapper over the C++ engine. Mappings are built from the catalog or from a
derivation pipeline, and checked with the same verifier the ``f2q`` command uses.
"""

from f2q._f2q import (
    MajoranaMonomial,
    ManifestError,
    Mapping,
    OracleSizeError,
    PauliOperator,
    SizeError,
    build_mapping,
    catalog_kinds,
    degeneracy,
    from_manifest,
    oracle_check,
    pipeline_equivalences,
    pipeline_kinds,
    reproduce_table,
    run_pipeline,
    separator_scan,
    to_manifest,
    verify,
    weight_table,
)

__all__ = [
    "MajoranaMonomial",
    "ManifestError",
    "Mapping",
    "OracleSizeError",
    "PauliOperator",
    "SizeError",
    "build_mapping",
    "catalog_kinds",
    "degeneracy",
    "from_manifest",
    "oracle_check",
    "pipeline_equivalences",
    "pipeline_kinds",
    "reproduce_table",
    "run_pipeline",
    "separator_scan",
    "to_manifest",
    "verify",
    "weight_table",
]
