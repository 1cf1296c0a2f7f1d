#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "jamkit/errors.hpp"

namespace jamkit::io {

/// Whitespace-token reader over a contest input, with an extra line mode for
/// problems whose case payload is one raw text line.
///
/// Token reads split on any ASCII whitespace. read_line() returns the next
/// full line verbatim; if the previous read left the stream mid-line (the
/// usual state right after reading the case count), the tail of that line is
/// discarded first.
class TokenStream {
public:
    explicit TokenStream(std::string text);
    static TokenStream from_stream(std::istream& in);

    /// Next whitespace-delimited token. Throws ParseError at end of input.
    std::string read_token();

    /// Next token parsed as a base-10 integer (optional leading minus).
    std::int64_t read_int();

    /// Next raw line, without its terminator. Interior and edge spaces are
    /// preserved. Throws ParseError at end of input.
    std::string read_line();

    /// True once only whitespace remains.
    bool at_end() const;

    /// Number of tokens consumed so far (used in diagnostics).
    std::size_t cursor() const { return tokens_read_; }

private:
    std::string text_;
    std::size_t pos_ = 0;
    std::size_t tokens_read_ = 0;
    bool mid_line_ = false;
};

/// "Case #<case_num>: <body>" (no trailing newline).
std::string format_case(std::int64_t case_num, std::string_view body);

} // namespace jamkit::io
