# Copyright 2026 The LAMA Authors
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


"""Local community detection across multiple networks."""

from ._lama import (
    Config,
    GenSpec,
    GroundTruth,
    LamaError,
    MultiNetwork,
    NetworkKind,
    detect,
    evaluate,
    generate,
    load_dataset,
    planted_community,
    protocol_seeds,
    prf,
    quality_ratio,
    save_dataset,
    sweep,
)

__all__ = [
    "Config",
    "GenSpec",
    "GroundTruth",
    "LamaError",
    "MultiNetwork",
    "NetworkKind",
    "detect",
    "evaluate",
    "generate",
    "load_dataset",
    "planted_community",
    "protocol_seeds",
    "prf",
    "quality_ratio",
    "save_dataset",
    "sweep",
]
