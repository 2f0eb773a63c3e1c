// Copyright 2026 The atomlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Umbrella header: relations and their algebra, connectivity and atoms,
// point-symmetry, Cayley graphs and zero-sum sequences, and the
// growth-inequality verifier.

#include "atomlab/connectivity.hpp"
#include "atomlab/errors.hpp"
#include "atomlab/group.hpp"
#include "atomlab/io.hpp"
#include "atomlab/relation.hpp"
#include "atomlab/symmetry.hpp"
#include "atomlab/verifier.hpp"
#include "atomlab/version.hpp"
#include "atomlab/vertex_set.hpp"
