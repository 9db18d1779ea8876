# SPDX-License-Identifier: Apache-2.0
# Copyright Contributors to the wce-enhance Project.
"""Capsule endoscopy image enhancement and quality metrics."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
