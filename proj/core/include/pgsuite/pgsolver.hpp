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


#ifndef PGSUITE_PGSOLVER_HPP
#define PGSUITE_PGSOLVER_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pgsuite/game.hpp"
#include "pgsuite/validate.hpp"

namespace pgsuite {

/**
 * PGSolver text format:
 *
 *   [parity <max-id>;]
 *   [start <id>;]
 *   <id> <priority> <owner> <succ>,<succ>,...[ "<label>"];
 *
 * Whitespace (including newlines) separates tokens; every statement ends in
 * ';'. Owner 0 is Even, 1 is Odd.
 */
struct ParseOptions
{
    /// Accept sparse vertex ids and renumber them densely in ascending order.
    /// Off by default: an id below the bound that is never defined is an error.
    bool renumber = false;
};

struct ParseResult
{
    ParityGame game;
    std::vector<Diagnostic> warnings;
};

class ParseError : public std::runtime_error
{
public:
    enum class Kind { Syntax, EmptySuccessors, SuccessorOutOfRange, DuplicateVertex, MissingVertex, Io };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

ParseResult parse_pgsolver(std::string_view text, const ParseOptions& options = {});

/// Reads a file, transparently decompressing bzip2 input (detected by magic bytes).
ParseResult read_pgsolver_file(const std::filesystem::path& path, const ParseOptions& options = {});

/// True if the bytes start with a bzip2 stream header.
bool is_bzip2(std::string_view bytes);
std::string bzip2_decompress(std::string_view bytes);
std::string bzip2_compress(std::string_view bytes);

/// Canonical output: header, ascending vertex ids, ascending successors.
std::string write_pgsolver(const ParityGame& game);
void write_pgsolver(const ParityGame& game, std::ostream& out);

}  // namespace pgsuite

#endif
