# Copyright 2026 The qpix authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Quantum-image encoding and amplitude-amplified pixel search.

Thin wrapper over the compiled extension; every name comes from the C++
core, so Python results are identical to the CLI's.
"""

from ._qpix import (  # noqa: F401
    MAX_QUBITS,
    Control,
    Error,
    Gate,
    GateKind,
    GrayImage,
    IncompleteReadoutError,
    IterationPlan,
    MeasurementCounts,
    NeqrLayout,
    NoMarkedItemsError,
    OracleMode,
    OracleSpec,
    ParseError,
    PixelPosition,
    QuantumCircuit,
    SearchReport,
    Statevector,
    ValidationError,
    amplify,
    analytic_neqr_state,
    bitstring_label,
    build_diffuser,
    build_neqr_circuit,
    build_phase_oracle,
    build_prep_circuit,
    decode_from_counts,
    find_darkest,
    find_marked_positions,
    plan_iterations,
    position_probabilities,
    random_image,
    read_image_file,
    run_search,
    run_verification,
    sample,
    validate_image,
    write_csv,
    write_pgm,
)

__all__ = [
    "MAX_QUBITS",
    "Control",
    "Error",
    "Gate",
    "GateKind",
    "GrayImage",
    "IncompleteReadoutError",
    "IterationPlan",
    "MeasurementCounts",
    "NeqrLayout",
    "NoMarkedItemsError",
    "OracleMode",
    "OracleSpec",
    "ParseError",
    "PixelPosition",
    "QuantumCircuit",
    "SearchReport",
    "Statevector",
    "ValidationError",
    "amplify",
    "analytic_neqr_state",
    "bitstring_label",
    "build_diffuser",
    "build_neqr_circuit",
    "build_phase_oracle",
    "build_prep_circuit",
    "decode_from_counts",
    "find_darkest",
    "find_marked_positions",
    "plan_iterations",
    "position_probabilities",
    "random_image",
    "read_image_file",
    "run_search",
    "run_verification",
    "sample",
    "validate_image",
    "write_csv",
    "write_pgm",
]

__version__ = "1.0.0"
