// Copyright 2026 The longpath Authors
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

#include "longpath/canonical.hpp"
#include "longpath/error.hpp"
#include "longpath/generator.hpp"
#include "longpath/graph6.hpp"
#include "longpath/lemmas.hpp"
#include "longpath/longest_path.hpp"
#include "longpath/separator.hpp"
#include "longpath/small_graph.hpp"
#include "longpath/verifier.hpp"
#include "longpath/vertex_set.hpp"
#include "longpath/witness.hpp"
