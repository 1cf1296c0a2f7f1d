#include "jamkit/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace jamkit::io {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

} // namespace

TokenStream::TokenStream(std::string text) : text_(std::move(text)) {}

TokenStream TokenStream::from_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return TokenStream(buf.str());
}

std::string TokenStream::read_token() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    if (pos_ >= text_.size())
        throw ParseError("unexpected EOF after token " + std::to_string(tokens_read_));
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    ++tokens_read_;
    mid_line_ = true;
    return text_.substr(start, pos_ - start);
}

std::int64_t TokenStream::read_int() {
    std::size_t at = tokens_read_;
    std::string tok = read_token();
    std::size_t i = 0;
    bool neg = false;
    if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) {
        neg = tok[i] == '-';
        ++i;
    }
    if (i >= tok.size())
        throw ParseError("parse error at token " + std::to_string(at) + ": '" + tok +
                         "' is not an integer");
    std::int64_t value = 0;
    for (; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError("parse error at token " + std::to_string(at) + ": '" + tok +
                             "' is not an integer");
        int digit = tok[i] - '0';
        if (value > (INT64_MAX - digit) / 10)
            throw ParseError("parse error at token " + std::to_string(at) + ": '" + tok +
                             "' overflows");
        value = value * 10 + digit;
    }
    return neg ? -value : value;
}

std::string TokenStream::read_line() {
    if (mid_line_) {
        // Discard the tail of the line the last token came from.
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        if (pos_ < text_.size()) ++pos_;
        mid_line_ = false;
    }
    if (pos_ >= text_.size()) throw ParseError("unexpected EOF: no line left");
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    std::size_t end = pos_;
    if (end > start && text_[end - 1] == '\r') --end;
    if (pos_ < text_.size()) ++pos_;
    return text_.substr(start, end - start);
}

bool TokenStream::at_end() const {
    for (std::size_t i = pos_; i < text_.size(); ++i)
        if (!is_space(text_[i])) return false;
    return true;
}

std::string format_case(std::int64_t case_num, std::string_view body) {
    std::string out = "Case #";
    out += std::to_string(case_num);
    out += ": ";
    out += body;
    return out;
}

} // namespace jamkit::io
