// Copyright 2026 The bettishape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "bettishape/error.hpp"
#include "bettishape/rational.hpp"
#include "bettishape/sequence.hpp"
#include "bettishape/functional.hpp"
#include "bettishape/rays.hpp"
#include "bettishape/linalg.hpp"
#include "bettishape/pure_betti.hpp"
#include "bettishape/regular_cone.hpp"
#include "bettishape/hypersurface_common.hpp"
#include "bettishape/hypersurface_total.hpp"
#include "bettishape/hypersurface_fixed.hpp"
#include "bettishape/cone_oracle.hpp"
#include "bettishape/json_io.hpp"
#include "bettishape/verify.hpp"
