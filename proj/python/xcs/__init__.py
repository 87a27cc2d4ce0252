# Copyright 2026 The xcs Authors. All Rights Reserved.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Core-level x-ray linear and 2D coherent spectra."""

from ._xcs import (
    ConfigurationError,
    Error,
    Manifold,
    ParseError,
    ValidationError,
    __version__,
    coupled_manifold,
    cross_peak,
    estimate_yield,
    fft_spectrum,
    product_manifold,
    random_manifold,
    response,
    xanes,
)

__all__ = [
    "ConfigurationError",
    "Error",
    "Manifold",
    "ParseError",
    "ValidationError",
    "__version__",
    "coupled_manifold",
    "cross_peak",
    "estimate_yield",
    "fft_spectrum",
    "product_manifold",
    "random_manifold",
    "response",
    "xanes",
]
