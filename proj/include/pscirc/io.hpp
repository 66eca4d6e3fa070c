#ifndef PSCIRC_IO_HPP
#define PSCIRC_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "pscirc/matrix.hpp"

namespace pscirc {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// Parse ".psm" text: `n <count>` then one `<label>: <e1> ... <e_2(n-1)>` line
/// per row; `#` starts a comment, blank lines are ignored, any row rotation is
/// accepted. The result is validated and rows are ordered by ascending label.
IntersectionMatrix parse_matrix(std::string_view text);

/// Serialize to ".psm". Each row is rotated to start at its minimal entry
/// (plus before minus, then label ascending); rows in ascending label order.
/// `header` lines, when given, are emitted as leading comments.
std::string serialize_matrix(const IntersectionMatrix& m,
                             const std::vector<std::string>& header_comments = {});

}  // namespace pscirc

#endif
