#include "pcvx/rational.hpp"

#include <cctype>

#include "pcvx/errors.hpp"

namespace pcvx {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
    std::size_t start = 0;
    if (!text.empty() && text[0] == '-') start = 1;
    const std::size_t slash = text.find('/');
    bool ok = false;
    if (slash == std::string::npos) {
        ok = all_digits(text, start, text.size());
    } else {
        ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
    }
    if (!ok) throw ParseError("invalid rational literal: \"" + text + "\"");

    Rat value;
    if (value.set_str(text, 10) != 0) throw ParseError("invalid rational literal: \"" + text + "\"");
    if (slash != std::string::npos && mpz_sgn(value.get_den().get_mpz_t()) == 0) {
        throw ParseError("zero denominator in rational literal: \"" + text + "\"");
    }
    value.canonicalize();
    return value;
}

std::string rat_to_string(const Rat& value) {
    return value.get_str();
}

}  // namespace pcvx
