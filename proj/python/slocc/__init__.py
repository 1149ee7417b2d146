# Copyright 2026 The slocc224 Authors
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

"""SLOCC classification of 2x2xn pure states."""

import numpy as np

from ._core import *  # noqa: F401,F403
from ._core import PureState

__version__ = "0.1.0"


def state(tensor):
    """PureState from a (2, 2, n) array of amplitudes indexed [i1, i2, i3]."""
    a = np.asarray(tensor, dtype=complex)
    if a.ndim != 3 or a.shape[:2] != (2, 2):
        raise ValueError(f"expected shape (2, 2, n), got {a.shape}")
    return PureState(a.shape[2], a.reshape(-1).tolist())


def tensor(psi):
    """Amplitudes of a PureState as a (2, 2, n) array."""
    return np.asarray(psi.amplitudes, dtype=complex).reshape(2, 2, psi.n)
