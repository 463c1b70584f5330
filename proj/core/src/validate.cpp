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


#include "pgsuite/validate.hpp"

namespace pgsuite {

const char* to_string(DiagnosticCode code)
{
    switch (code) {
    case DiagnosticCode::NonTotal: return "NonTotal";
    case DiagnosticCode::DanglingEdge: return "DanglingEdge";
    case DiagnosticCode::DuplicateSuccessor: return "DuplicateSuccessor";
    case DiagnosticCode::MissingVertex: return "MissingVertex";
    case DiagnosticCode::DuplicateVertex: return "DuplicateVertex";
    }
    return "Unknown";
}

std::vector<Diagnostic> validate(const ParityGame& game)
{
    std::vector<Diagnostic> out;
    const auto n = game.num_vertices();
    for (VertexId v = 0; v < n; ++v) {
        auto succ = game.successors(v);
        if (succ.empty()) {
            out.push_back({DiagnosticCode::NonTotal, v, std::nullopt,
                           "vertex " + std::to_string(v) + " has no successors"});
            continue;
        }
        // lists are sorted, so duplicates are adjacent
        for (std::size_t i = 0; i < succ.size(); ++i) {
            if (succ[i] >= n) {
                out.push_back({DiagnosticCode::DanglingEdge, v, succ[i],
                               "vertex " + std::to_string(v) + " has successor " +
                                   std::to_string(succ[i]) + " outside [0, " +
                                   std::to_string(n) + ")"});
            }
            if (i > 0 && succ[i] == succ[i - 1]) {
                out.push_back({DiagnosticCode::DuplicateSuccessor, v, succ[i],
                               "vertex " + std::to_string(v) + " lists successor " +
                                   std::to_string(succ[i]) + " more than once"});
            }
        }
    }
    return out;
}

}  // namespace pgsuite
