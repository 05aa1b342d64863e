// Copyright 2026 The qperm Authors
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

#include "qperm/affine.hpp"
#include "qperm/appendix.hpp"
#include "qperm/bit_matrix.hpp"
#include "qperm/circuit.hpp"
#include "qperm/combinatorics.hpp"
#include "qperm/conjugate.hpp"
#include "qperm/dense.hpp"
#include "qperm/encodings.hpp"
#include "qperm/errors.hpp"
#include "qperm/fermion.hpp"
#include "qperm/minimal_basis.hpp"
#include "qperm/pauli_string.hpp"
#include "qperm/pauli_sum.hpp"
#include "qperm/permutation.hpp"
#include "qperm/reduce.hpp"
#include "qperm/synthesis.hpp"
