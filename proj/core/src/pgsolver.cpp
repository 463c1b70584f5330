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


#include "pgsuite/pgsolver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <boost/iostreams/copy.hpp>
#include <boost/iostreams/filter/bzip2.hpp>
#include <boost/iostreams/filtering_stream.hpp>

namespace pgsuite {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + what : what),
      kind_(kind), line_(line), column_(column)
{
}

namespace {

struct Position
{
    std::size_t line = 1;
    std::size_t column = 1;
};

struct Entry
{
    std::uint64_t id;
    VertexInfo info;
    std::vector<std::uint64_t> successors;
    Position pos;
    Position succ_pos;
};

class Lexer
{
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_ws()
    {
        while (i_ < text_.size()) {
            char c = text_[i_];
            if (c == '\n') {
                ++pos_.line;
                pos_.column = 1;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
                ++pos_.column;
            } else {
                break;
            }
            ++i_;
        }
    }

    [[nodiscard]] bool eof() const { return i_ >= text_.size(); }
    [[nodiscard]] char peek() const { return eof() ? '\0' : text_[i_]; }
    [[nodiscard]] Position pos() const { return pos_; }

    void advance()
    {
        ++i_;
        ++pos_.column;
    }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

    [[noreturn]] static void fail_at(Position p, const std::string& msg)
    {
        throw ParseError(ParseError::Kind::Syntax, p.line, p.column, msg);
    }

    std::uint64_t number(const char* what, std::uint64_t max = std::numeric_limits<VertexId>::max())
    {
        skip_ws();
        Position start = pos_;
        if (peek() == '-') fail(std::string("negative ") + what);
        if (!isdigit(peek())) fail(std::string("expected ") + what);
        std::uint64_t value = 0;
        while (isdigit(peek())) {
            value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (value > max) fail_at(start, std::string(what) + " out of range");
            advance();
        }
        return value;
    }

    std::string word()
    {
        std::string w;
        while (std::isalpha(static_cast<unsigned char>(peek())) != 0) {
            w.push_back(peek());
            advance();
        }
        return w;
    }

    std::string quoted()
    {
        // opening quote already checked by the caller
        Position start = pos_;
        advance();
        std::string out;
        for (;;) {
            if (eof()) fail_at(start, "unterminated label");
            char c = peek();
            if (c == '"') {
                advance();
                return out;
            }
            if (c == '\n') fail_at(start, "newline in label");
            if (c == '\\') {
                advance();
                if (eof()) fail_at(start, "unterminated label");
                c = peek();
            }
            out.push_back(c);
            advance();
        }
    }

    void expect(char c)
    {
        skip_ws();
        if (peek() != c) {
            if (eof()) fail(std::string("expected '") + c + "' before end of input");
            fail(std::string("expected '") + c + "', found '" + peek() + "'");
        }
        advance();
    }

private:
    static bool isdigit(char c) { return c >= '0' && c <= '9'; }

    std::string_view text_;
    std::size_t i_ = 0;
    Position pos_;
};

Entry parse_vertex(Lexer& lx)
{
    Entry e;
    e.pos = lx.pos();
    e.id = lx.number("vertex id");
    e.info.priority = static_cast<Priority>(lx.number("priority"));
    lx.skip_ws();
    Position owner_pos = lx.pos();
    auto owner = lx.number("owner");
    if (owner > 1) Lexer::fail_at(owner_pos, "owner must be 0 or 1");
    e.info.owner = owner == 0 ? Player::Even : Player::Odd;

    lx.skip_ws();
    e.succ_pos = lx.pos();
    if (lx.peek() == ';' || lx.peek() == '"' || lx.eof()) {
        throw ParseError(ParseError::Kind::EmptySuccessors, e.succ_pos.line, e.succ_pos.column,
                         "vertex " + std::to_string(e.id) + " has an empty successor list");
    }
    e.successors.push_back(lx.number("successor id"));
    for (;;) {
        lx.skip_ws();
        if (lx.peek() != ',') break;
        lx.advance();
        e.successors.push_back(lx.number("successor id"));
    }

    lx.skip_ws();
    if (lx.peek() == '"') {
        e.info.label = lx.quoted();
        lx.skip_ws();
        if (lx.peek() == '"') lx.fail("more than one label");
    }
    lx.expect(';');
    return e;
}

}  // namespace

ParseResult parse_pgsolver(std::string_view text, const ParseOptions& options)
{
    Lexer lx(text);
    std::optional<std::uint64_t> header;
    std::optional<std::uint64_t> start;
    Position start_pos;
    std::vector<Entry> entries;

    for (bool first = true;; first = false) {
        lx.skip_ws();
        if (lx.eof()) break;
        if (std::isalpha(static_cast<unsigned char>(lx.peek())) != 0) {
            Position p = lx.pos();
            std::string kw = lx.word();
            if (kw == "parity") {
                if (!first) Lexer::fail_at(p, "'parity' header must be the first statement");
                header = lx.number("header bound");
            } else if (kw == "start") {
                if (start) Lexer::fail_at(p, "duplicate 'start' statement");
                start_pos = p;
                start = lx.number("start vertex");
            } else {
                Lexer::fail_at(p, "unknown keyword '" + kw + "'");
            }
            lx.expect(';');
            continue;
        }
        entries.push_back(parse_vertex(lx));
    }

    // duplicate definitions, reported at the second occurrence
    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return entries[a].id < entries[b].id; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        const Entry& e = entries[order[i]];
        if (e.id == entries[order[i - 1]].id) {
            throw ParseError(ParseError::Kind::DuplicateVertex, e.pos.line, e.pos.column,
                             "vertex " + std::to_string(e.id) + " defined twice");
        }
    }

    if (header) {
        for (const Entry& e : entries) {
            if (e.id > *header) {
                throw ParseError(ParseError::Kind::SuccessorOutOfRange, e.pos.line, e.pos.column,
                                 "vertex id " + std::to_string(e.id) + " exceeds header bound " +
                                     std::to_string(*header));
            }
        }
    }

    // map file ids to dense ids
    std::vector<std::uint64_t> sorted_ids;
    sorted_ids.reserve(entries.size());
    for (std::size_t i : order) sorted_ids.push_back(entries[i].id);

    const bool dense = [&] {
        if (entries.empty()) return !header.has_value();
        std::uint64_t bound = header.value_or(sorted_ids.back());
        return sorted_ids.size() == bound + 1;
    }();
    if (!dense && !options.renumber) {
        std::uint64_t missing = 0;
        while (missing < sorted_ids.size() && sorted_ids[missing] == missing) ++missing;
        throw ParseError(ParseError::Kind::MissingVertex, 0, 0,
                         "vertex " + std::to_string(missing) + " is below the id bound but never defined");
    }
    auto dense_id = [&](std::uint64_t file_id) -> std::optional<VertexId> {
        auto it = std::lower_bound(sorted_ids.begin(), sorted_ids.end(), file_id);
        if (it == sorted_ids.end() || *it != file_id) return std::nullopt;
        return static_cast<VertexId>(it - sorted_ids.begin());
    };

    ParseResult result;
    const std::size_t n = entries.size();
    std::vector<VertexInfo> vertices(n);
    std::vector<std::vector<VertexId>> successors(n);
    for (Entry& e : entries) {
        const VertexId v = *dense_id(e.id);
        vertices[v] = std::move(e.info);
        auto& succ = successors[v];
        succ.reserve(e.successors.size());
        for (std::uint64_t s : e.successors) {
            auto d = dense_id(s);
            if (!d) {
                throw ParseError(ParseError::Kind::SuccessorOutOfRange, e.succ_pos.line, e.succ_pos.column,
                                 "vertex " + std::to_string(e.id) + " has undefined successor " +
                                     std::to_string(s));
            }
            succ.push_back(*d);
        }
        std::sort(succ.begin(), succ.end());
        for (std::size_t i = 1; i < succ.size(); ++i) {
            if (succ[i] == succ[i - 1]) {
                result.warnings.push_back({DiagnosticCode::DuplicateSuccessor, v, succ[i],
                                           "line " + std::to_string(e.pos.line) + ": vertex " +
                                               std::to_string(e.id) + " lists successor " +
                                               std::to_string(sorted_ids[succ[i]]) +
                                               " more than once; collapsed"});
            }
        }
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }

    std::optional<VertexId> initial;
    if (start) {
        initial = dense_id(*start);
        if (!initial) {
            throw ParseError(ParseError::Kind::SuccessorOutOfRange, start_pos.line, start_pos.column,
                             "start vertex " + std::to_string(*start) + " is not defined");
        }
    }
    result.game = ParityGame(std::move(vertices), std::move(successors), initial);
    return result;
}

bool is_bzip2(std::string_view bytes)
{
    return bytes.size() >= 4 && bytes[0] == 'B' && bytes[1] == 'Z' && bytes[2] == 'h' && bytes[3] >= '1' &&
           bytes[3] <= '9';
}

std::string bzip2_decompress(std::string_view bytes)
{
    namespace io = boost::iostreams;
    std::istringstream in{std::string(bytes)};
    io::filtering_istream fin;
    fin.push(io::bzip2_decompressor());
    fin.push(in);
    std::ostringstream out;
    try {
        io::copy(fin, out);
    } catch (const std::exception& ex) {
        throw ParseError(ParseError::Kind::Io, 0, 0, std::string("bzip2 decompression failed: ") + ex.what());
    }
    return out.str();
}

std::string bzip2_compress(std::string_view bytes)
{
    namespace io = boost::iostreams;
    std::istringstream in{std::string(bytes)};
    io::filtering_istream fin;
    fin.push(io::bzip2_compressor());
    fin.push(in);
    std::ostringstream out;
    io::copy(fin, out);
    return out.str();
}

ParseResult read_pgsolver_file(const std::filesystem::path& path, const ParseOptions& options)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(ParseError::Kind::Io, 0, 0, "cannot open '" + path.string() + "'");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (is_bzip2(bytes)) bytes = bzip2_decompress(bytes);
    return parse_pgsolver(bytes, options);
}

namespace {

void write_label(std::ostream& out, const std::string& label)
{
    out << '"';
    for (char c : label) {
        if (c == '"' || c == '\\') out << '\\';
        out << c;
    }
    out << '"';
}

}  // namespace

void write_pgsolver(const ParityGame& game, std::ostream& out)
{
    const auto n = game.num_vertices();
    if (n == 0) return;
    out << "parity " << n - 1 << ";\n";
    if (game.has_explicit_initial_vertex() && *game.initial_vertex() != 0) {
        out << "start " << *game.initial_vertex() << ";\n";
    }
    for (VertexId v = 0; v < n; ++v) {
        const auto& info = game.vertex(v);
        out << v << ' ' << info.priority << ' ' << static_cast<int>(info.owner) << ' ';
        bool first = true;
        for (VertexId w : game.successors(v)) {
            if (!first) out << ',';
            out << w;
            first = false;
        }
        if (info.label) {
            out << ' ';
            write_label(out, *info.label);
        }
        out << ";\n";
    }
}

std::string write_pgsolver(const ParityGame& game)
{
    std::ostringstream out;
    write_pgsolver(game, out);
    return out.str();
}

}  // namespace pgsuite
