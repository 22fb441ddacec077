#pragma once

/**
 * @file format.hpp
 * @brief Text grammar for scalars and matrices.
 *
 * Quaternion literal: a signed sum of terms, each a rational coefficient
 * (`p` or `p/q`, integer p, positive integer q) optionally followed by one
 * unit letter i, j, or k; a bare unit letter means coefficient 1; no
 * internal whitespace.  Examples: `3/2+1i-2/5j+0k`, `-k`, `0`.
 *
 * Matrix file: line 1 is `m n`, then m lines of n whitespace-separated
 * literals.  Everything printed here re-parses to an equal value.
 */

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "consim/matrix.hpp"

namespace consim {

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << to_string(r); }
inline std::ostream& operator<<(std::ostream& os, const CRat& z) { return os << to_string(z); }
inline std::ostream& operator<<(std::ostream& os, const QRat& q) { return os << to_string(q); }

namespace detail {

// Parses one quaternion literal; columns are 1-based and offset by col0
// so matrix-file errors point into the file.
inline QRat parse_quaternion_at(std::string_view text, std::size_t line, std::size_t col0) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw ParseError(line, col0 + pos, what);
    };
    auto peek = [&]() -> char { return pos < text.size() ? text[pos] : '\0'; };
    auto parse_uint = [&]() -> mpz_class {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail("expected digits");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    };

    if (text.empty()) throw ParseError(line, col0, "empty literal");
    QRat result;
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (peek() == '-') sign = -1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Rat coeff;
        char u = peek();
        if (u == 'i' || u == 'j' || u == 'k') {
            coeff = Rat(1);
            ++pos;
        } else if (u >= '0' && u <= '9') {
            mpz_class num = parse_uint();
            mpz_class den(1);
            if (peek() == '/') {
                ++pos;
                std::size_t den_pos = pos;
                den = parse_uint();
                if (den == 0) throw ParseError(line, col0 + den_pos, "zero denominator");
            }
            coeff = Rat(num, den);
            u = peek();
            if (u == 'i' || u == 'j' || u == 'k')
                ++pos;
            else if (u != '+' && u != '-' && u != '\0')
                fail("unknown unit letter");
            else
                u = '\0';
        } else {
            fail("expected a rational coefficient or unit letter");
        }
        if (sign < 0) coeff = -coeff;
        switch (u) {
            case 'i': result.b += coeff; break;
            case 'j': result.c += coeff; break;
            case 'k': result.d += coeff; break;
            default: result.a += coeff; break;
        }
    }
    return result;
}

}  // namespace detail

inline QRat parse_quaternion(std::string_view text) {
    return detail::parse_quaternion_at(text, 1, 1);
}

// Parse a whole matrix body (the text format described above).
inline Mat<QRat> parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError(1, 1, "missing header line");
    std::size_t rows = 0, cols = 0;
    {
        std::istringstream hs(line);
        long long r = -1, c = -1;
        if (!(hs >> r >> c) || r < 0 || c < 0) throw ParseError(lineno, 1, "expected `rows cols`");
        std::string extra;
        if (hs >> extra) throw ParseError(lineno, 1, "trailing tokens after `rows cols`");
        rows = static_cast<std::size_t>(r);
        cols = static_cast<std::size_t>(c);
    }
    Mat<QRat> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!next_line()) throw ParseError(lineno + 1, 1, "missing matrix row");
        std::size_t pos = 0, j = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
            if (pos == line.size()) break;
            std::size_t start = pos;
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
            if (j >= cols) throw ParseError(lineno, start + 1, "too many entries in row");
            m(i, j++) = detail::parse_quaternion_at(
                std::string_view(line).substr(start, pos - start), lineno, start + 1);
        }
        if (j != cols) throw ParseError(lineno, line.size() + 1, "too few entries in row");
    }
    while (std::getline(in, line)) {
        ++lineno;
        for (char ch : line)
            if (ch != ' ' && ch != '\t' && ch != '\r')
                throw ParseError(lineno, 1, "unexpected content after matrix rows");
    }
    return m;
}

inline Mat<QRat> parse_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str());
}

inline std::string matrix_to_text(const Mat<QRat>& m) {
    std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += " ";
            s += to_string(m(i, j));
        }
        s += "\n";
    }
    return s;
}

inline std::string matrix_to_text(const Mat<CRat>& m) { return matrix_to_text(to_quaternion(m)); }

template <class T>
std::ostream& operator<<(std::ostream& os, const Mat<T>& m) {
    return os << matrix_to_text(m);
}

}  // namespace consim
