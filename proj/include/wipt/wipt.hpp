// SPDX-License-Identifier: Apache-2.0
//
// wiptlib - numerical toolkit for wireless information and power transfer
// Copyright (C) 2026 the wiptlib authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef WIPT_WIPT_HPP
#define WIPT_WIPT_HPP

#include "capacity.hpp"
#include "config.hpp"
#include "csv.hpp"
#include "errors.hpp"
#include "netgeom.hpp"
#include "numerics.hpp"
#include "oracles.hpp"
#include "receiver.hpp"
#include "rectenna.hpp"
#include "rng.hpp"
#include "robust.hpp"
#include "sweeps.hpp"
#include "waveform.hpp"

#endif
