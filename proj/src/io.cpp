#include "pscirc/io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace pscirc {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_space_and_comments(bool stop_at_newline) {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else if (c == '\n') {
                if (stop_at_newline) return;
                advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }
};

long parse_int(Cursor& c, const char* what) {
    c.skip_space_and_comments(true);
    if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw ParseError(std::string("expected ") + what, c.line, c.col);
    long value = 0;
    while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        value = value * 10 + (c.peek() - '0');
        if (value > 1000000) throw ParseError(std::string(what) + " out of range", c.line, c.col);
        c.advance();
    }
    return value;
}

}  // namespace

IntersectionMatrix parse_matrix(std::string_view text) {
    Cursor c{text};
    c.skip_space_and_comments(false);
    if (c.eof() || c.peek() != 'n') throw ParseError("expected 'n <count>' header", c.line, c.col);
    c.advance();
    long n = parse_int(c, "curve count");
    if (n < 1) throw ParseError("curve count must be >= 1", c.line, c.col);

    std::map<int, Row> rows;
    for (long r = 0; r < n; ++r) {
        c.skip_space_and_comments(false);
        if (c.eof()) throw ParseError("expected a row line", c.line, c.col);
        long label = parse_int(c, "row label");
        c.skip_space_and_comments(true);
        if (c.eof() || c.peek() != ':') throw ParseError("expected ':' after row label", c.line, c.col);
        c.advance();
        if (rows.count(static_cast<int>(label)))
            throw ParseError("duplicate row label " + std::to_string(label), c.line, c.col);
        Row row;
        while (true) {
            c.skip_space_and_comments(true);
            if (c.eof() || c.peek() == '\n') break;
            char sc = c.peek();
            if (sc != '+' && sc != '-')
                throw ParseError("expected entry sign '+' or '-'", c.line, c.col);
            c.advance();
            if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek())))
                throw ParseError("expected entry label after sign", c.line, c.col);
            long el = parse_int(c, "entry label");
            if (el < 1) throw ParseError("entry label must be >= 1", c.line, c.col);
            row.emplace_back(static_cast<int>(el), sc == '+' ? Sign::plus : Sign::minus);
        }
        rows[static_cast<int>(label)] = std::move(row);
    }
    c.skip_space_and_comments(false);
    if (!c.eof()) throw ParseError("unexpected trailing content", c.line, c.col);

    if (auto v = validate(rows)) throw ValidationError(*v);
    return IntersectionMatrix(std::move(rows));
}

std::string serialize_matrix(const IntersectionMatrix& m,
                             const std::vector<std::string>& header_comments) {
    std::ostringstream out;
    out << "# psm 1\n";
    for (const std::string& h : header_comments) out << "# " << h << "\n";
    out << "n " << m.n() << "\n";
    for (int label : m.labels()) {
        out << label << ":";
        for (const SignedEntry& e : min_rotation(m.row(label))) out << " " << e.to_string();
        out << "\n";
    }
    return out.str();
}

}  // namespace pscirc
