// Copyright 2026 The EAQECC Authors
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

#ifndef EAQECC_CODE_FILE_HPP
#define EAQECC_CODE_FILE_HPP

// Classical code files:
//
//     # comment
//     n k [d]
//     <n tokens from 0 1 w W>     (n - k rows)
//
// `w` is the field element w and `W` its square. Anything after '#' on a line
// is ignored, as are blank lines.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eaqecc/builder.hpp"
#include "eaqecc/gf4.hpp"

namespace eaqecc {

/// Malformed code file. `line` and `column` are 1-based.
struct CodeFileError : std::runtime_error {
    CodeFileError(const std::string &source, std::size_t line, std::size_t column, const std::string &msg)
        : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

/// A parsed code file together with where it came from.
struct CodeFile {
    std::string path;
    ClassicalCode code;
};

namespace detail {

struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

inline std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
                ++i;
            }
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
                ++j;
            }
            if (j > i) {
                tokens.push_back(Token{line.substr(i, j - i), line_no, i + 1});
            }
            i = j;
        }
        if (!tokens.empty()) {
            lines.push_back(std::move(tokens));
        }
        start = end + 1;
    }
    return lines;
}

inline std::size_t parse_count(const Token &t, const std::string &source, const char *what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw CodeFileError(source, t.line, t.column, std::string("expected a non-negative integer for ") + what +
                                                          ", got '" + std::string(t.text) + "'");
    }
    return value;
}

}  // namespace detail

inline ClassicalCode parse_code_text(std::string_view text, const std::string &source = "<input>") {
    auto lines = detail::tokenize_lines(text);
    if (lines.empty()) {
        throw CodeFileError(source, 1, 1, "empty code file, expected header 'n k'");
    }
    const auto &header = lines.front();
    if (header.size() < 2 || header.size() > 3) {
        throw CodeFileError(source, header.front().line, header.front().column, "header must be 'n k' or 'n k d'");
    }
    std::size_t n = detail::parse_count(header[0], source, "n");
    std::size_t k = detail::parse_count(header[1], source, "k");
    std::optional<std::size_t> d;
    if (header.size() == 3) {
        d = detail::parse_count(header[2], source, "d");
    }
    if (n == 0) {
        throw CodeFileError(source, header[0].line, header[0].column, "n must be positive");
    }
    if (k > n) {
        throw CodeFileError(source, header[1].line, header[1].column, "k must not exceed n");
    }
    std::size_t rows = n - k;
    if (lines.size() - 1 != rows) {
        const auto &where = lines.size() - 1 > rows ? lines[rows + 1].front() : lines.back().back();
        throw CodeFileError(source, where.line, where.column,
                            "expected " + std::to_string(rows) + " parity-check rows, found " +
                                std::to_string(lines.size() - 1));
    }
    Gf4Matrix h(rows, n);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto &row = lines[r + 1];
        if (row.size() != n) {
            const detail::Token &where = row.size() > n ? row[n] : row.back();
            throw CodeFileError(source, where.line, where.column,
                                "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
        }
        for (std::size_t c = 0; c < n; ++c) {
            const detail::Token &t = row[c];
            if (t.text.size() != 1) {
                throw CodeFileError(source, t.line, t.column, "invalid GF(4) token '" + std::string(t.text) + "'");
            }
            try {
                h(r, c) = Gf4::from_token(t.text.front());
            } catch (const std::invalid_argument &e) {
                throw CodeFileError(source, t.line, t.column, e.what());
            }
        }
    }
    try {
        return ClassicalCode(n, k, std::move(h), d);
    } catch (const std::invalid_argument &e) {
        throw CodeFileError(source, lines[1].front().line, 1, e.what());
    }
}

inline CodeFile load_code_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open code file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return CodeFile{path, parse_code_text(buffer.str(), path)};
}

inline std::string format_code_text(const ClassicalCode &code) {
    std::string out = std::to_string(code.n()) + " " + std::to_string(code.k());
    if (code.d_claimed()) {
        out += " " + std::to_string(*code.d_claimed());
    }
    out += "\n";
    for (std::size_t r = 0; r < code.h().rows(); ++r) {
        for (std::size_t c = 0; c < code.h().cols(); ++c) {
            if (c > 0) {
                out += ' ';
            }
            out += code.h()(r, c).token();
        }
        out += "\n";
    }
    return out;
}

}  // namespace eaqecc

#endif
