// Copyright 2026 The iccc-potts Authors.
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

/// @file iccc.hpp
/// Umbrella header.

#pragma once

#include "iccc/cli.hpp"
#include "iccc/codes.hpp"
#include "iccc/error.hpp"
#include "iccc/ff.hpp"
#include "iccc/gauss.hpp"
#include "iccc/graph.hpp"
#include "iccc/matrix.hpp"
#include "iccc/mceliece.hpp"
#include "iccc/membership.hpp"
#include "iccc/numtheory.hpp"
#include "iccc/parallel.hpp"
#include "iccc/pipeline.hpp"
#include "iccc/potts.hpp"
#include "iccc/serialize.hpp"
