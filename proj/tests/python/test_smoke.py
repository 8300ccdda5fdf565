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

import hashlib
import json
import math
import pathlib

import pytest

import qsa

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def test_quantize_wraps():
    assert qsa.quantize_phase(0.0, 3) == 0
    assert qsa.quantize_phase(2 * math.pi - 1e-9, 3) == 0
    assert qsa.quantize_phase(math.pi, 1) == 1


def test_compile_and_ldqpe_agree():
    ch = qsa.compile_symmetric(bytes(32), 0, 3)
    assert ch.n == 3
    assert ch.fidelity >= 0.9
    assert len(ch.digest) == 32
    assert ch.ldqpe(4)["bucket"] == ch.bucket(4)


def test_compile_is_deterministic():
    a = qsa.compile_symmetric(b"\x01" * 32, 3, 3)
    b = qsa.compile_symmetric(b"\x01" * 32, 3, 3)
    assert a.digest == b.digest
    assert a.betas == b.betas


def test_key_matches_fixture():
    kat = json.loads((FIXTURES / "key_kat.json").read_text())
    digests = [hashlib.sha256(p.encode()).digest() for p in kat["digest_preimages"]]
    vn = bytes.fromhex(kat["v_nonce"])
    pn = bytes.fromhex(kat["p_nonce"])
    t = qsa.encode_transcript(vn, pn, kat["schedule_id"], digests, kat["m"], kat["k"])
    assert t.hex() == kat["transcript"]
    key = qsa.derive_key(kat["buckets"], kat["m"], vn, pn, kat["schedule_id"], digests)
    assert key.hex() == kat["key"]
    assert qsa.confirm_tag(key, "V", vn + pn).hex() == kat["verifier_tag_nonce_v_then_p"]


def test_bad_nonce_raises():
    with pytest.raises(ValueError):
        qsa.encode_transcript(b"short", bytes(16), 0, [], 1, 0)


def test_cost_models():
    assert qsa.classical_eve_years(27) == pytest.approx(9.81e3, rel=0.01)
    assert qsa.honest_classical_seconds(27) == pytest.approx(7.5e4, rel=0.01)
    assert qsa.memory_cutoffs(9.2e15, 2) == (24, 47)
    assert qsa.bell_budget(110, 8, 8, 36) == 506880
    assert qsa.survival_budget(555) == pytest.approx(9.2e-5, rel=0.02)


def test_result_frame_bytes():
    assert qsa.result_frame(True).hex() == "00000007" + "053000000001" + "01"
