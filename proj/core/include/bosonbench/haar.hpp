// Copyright 2026 The bosonbench Authors
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

#ifndef BOSONBENCH_HAAR_HPP
#define BOSONBENCH_HAAR_HPP

#include <cstdint>

#include "bosonbench/matrix.hpp"

namespace bb {

/// Haar-distributed m x m unitary: QR of a complex Ginibre matrix with the
/// R diagonal's phases folded back into Q. Deterministic per seed.
ComplexMatrix haar_unitary(std::size_t m, std::uint64_t seed);

}  // namespace bb

#endif  // BOSONBENCH_HAAR_HPP
