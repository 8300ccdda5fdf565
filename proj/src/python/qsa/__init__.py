# Copyright 2026 The QSA Authors
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

"""Python access to the QSA core (compiler, LDQPE, key schedule, cost models)."""

from ._qsa import (
    CapacityError,
    Challenge,
    ProtocolError,
    ValidationError,
    bell_budget,
    bucket_center,
    classical_eve_years,
    compile_symmetric,
    confirm_tag,
    derive_key,
    encode_transcript,
    honest_classical_seconds,
    memory_cutoffs,
    quantize_phase,
    quantum_eve_years,
    result_frame,
    survival_budget,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "Challenge",
    "ProtocolError",
    "ValidationError",
    "bell_budget",
    "bucket_center",
    "classical_eve_years",
    "compile_symmetric",
    "confirm_tag",
    "derive_key",
    "encode_transcript",
    "honest_classical_seconds",
    "memory_cutoffs",
    "quantize_phase",
    "quantum_eve_years",
    "result_frame",
    "survival_budget",
]
