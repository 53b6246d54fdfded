# Copyright 2026 The segjoin Authors. All Rights Reserved.
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

"""Edit-distance similarity joins."""

from segjoin._segjoin import (
    banded_verify,
    brute_force_join,
    closed_form_count,
    edit_distance,
    generate,
    load_dataset,
    partition,
    rs_join,
    selection_count,
    self_join,
    split_segments,
    window,
)

SELECTORS = ("length", "shift", "position", "multimatch")
VERIFIERS = ("dp", "banded", "extension", "extension-share")

__all__ = [
    "SELECTORS",
    "VERIFIERS",
    "banded_verify",
    "brute_force_join",
    "closed_form_count",
    "edit_distance",
    "generate",
    "load_dataset",
    "partition",
    "rs_join",
    "selection_count",
    "self_join",
    "split_segments",
    "window",
]
