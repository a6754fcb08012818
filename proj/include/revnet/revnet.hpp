// Copyright 2026 The revnet authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "revnet/arith.hpp"
#include "revnet/circuit.hpp"
#include "revnet/cost.hpp"
#include "revnet/decompose.hpp"
#include "revnet/errors.hpp"
#include "revnet/gate.hpp"
#include "revnet/netlist.hpp"
#include "revnet/simulate.hpp"
