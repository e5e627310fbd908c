#include "hmap/cli_util.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace hmap {

namespace {

double parse_double(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters in number '" + s + "'");
    return v;
}

// "", "+", "-" mean 1, +1, -1 (the coefficient of a bare 'i').
double parse_signed_or_unit(const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_double(s);
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    if (const auto at = s.find('@'); at != std::string::npos) {
        const double r = parse_double(s.substr(0, at));
        const double theta = parse_double(s.substr(at + 1));
        return std::polar(r, theta);
    }

    if (s.back() == 'i' || s.back() == 'I') {
        const std::string body = s.substr(0, s.size() - 1);
        // split at the sign that separates real and imaginary parts
        for (std::size_t k = body.size(); k-- > 1;) {
            const char c = body[k];
            if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                return Complex(parse_double(body.substr(0, k)),
                               parse_signed_or_unit(body.substr(k)));
            }
        }
        return Complex(0.0, parse_signed_or_unit(body));
    }
    return Complex(parse_double(s), 0.0);
}

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return format_double(z.real());
    std::string out = format_double(z.real());
    if (z.imag() >= 0.0 || std::isnan(z.imag())) out += "+";
    out += format_double(z.imag());
    out += "i";
    return out;
}

}  // namespace hmap
