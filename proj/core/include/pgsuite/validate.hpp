/*
 * Copyright 2026 The pgsuite Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef PGSUITE_VALIDATE_HPP
#define PGSUITE_VALIDATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pgsuite/game.hpp"

namespace pgsuite {

enum class DiagnosticCode {
    NonTotal,            // vertex without successors
    DanglingEdge,        // successor id outside the vertex range
    DuplicateSuccessor,  // successor listed more than once
    MissingVertex,       // id below the header bound never defined (parser only)
    DuplicateVertex,     // id defined twice (parser only)
};

const char* to_string(DiagnosticCode code);

struct Diagnostic
{
    DiagnosticCode code;
    VertexId vertex = 0;
    std::optional<std::uint64_t> target;  // offending successor, when there is one
    std::string message;
};

/// Checks the arena invariants. An empty result means the game is valid.
std::vector<Diagnostic> validate(const ParityGame& game);

}  // namespace pgsuite

#endif
