#pragma once

// Textual form of a transformation: "[a, b; c, d] +" (conformal) or
// "[a, b; c, d] -" (anticonformal), entries written as x+yi.

#include <cctype>
#include <cstdio>
#include <string>

#include "schottky/errors.hpp"
#include "schottky/moebius.hpp"

namespace schottky {

inline std::string format_real(double x) {
    if (x == 0) x = 0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline std::string format_complex(Complex z) {
    double re = z.real(), im = z.imag();
    if (std::abs(re) < 5e-13) re = 0;
    if (std::abs(im) < 5e-13) im = 0;
    if (im == 0) return format_real(re);
    std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : format_real(im) + "i";
    if (re == 0) return imag;
    if (im > 0) return format_real(re) + "+" + imag;
    return format_real(re) + imag;
}

inline Complex parse_complex(std::string s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw IoError("empty complex literal");
    bool has_i = t.back() == 'i' || t.back() == 'I';
    if (!has_i) {
        size_t pos = 0;
        double x = std::stod(t, &pos);
        if (pos != t.size()) throw IoError("bad complex literal: " + s);
        return {x, 0.0};
    }
    t.pop_back();
    // split at the last top-levelsign that is not an exponent sign / leading
    size_t split = std::string::npos;
    for (size_t k = t.size(); k-- > 1;) {
        if (t[k] != '+' && t[k] != '-') continue;
        char prev = t[k - 1];
        if (prev == 'e' || prev == 'E') continue;
        split = k;
        break;
    }
    auto imag_of = [&](std::string part) -> double {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        size_t pos = 0;
        double x = std::stod(part, &pos);
        if (pos != part.size()) throw IoError("bad complex literal: " + s);
        return x;
    };
    if (split == std::string::npos) return {0.0, imag_of(t)};
    size_t pos = 0;
    double re = std::stod(t.substr(0, split), &pos);
    if (pos != split) throw IoError("bad complex literal: " + s);
    return {re, imag_of(t.substr(split))};
}

inline std::string format_transform(const ExtendedMoebius& t) {
    return "[" + format_complex(t.m.a) + ", " + format_complex(t.m.b) + "; " +
           format_complex(t.m.c) + ", " + format_complex(t.m.d) + "] " +
           (t.reversing ? "-" : "+");
}

inline ExtendedMoebius parse_transform(const std::string& text) {
    size_t open = text.find('[');
    size_t close = text.find(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw IoError("expected '[a, b; c, d] +|-': " + text);
    std::string body = text.substr(open + 1, close - open - 1);
    size_t semi = body.find(';');
    if (semi == std::string::npos) throw IoError("missing ';' in matrix: " + text);
    std::string row1 = body.substr(0, semi), row2 = body.substr(semi + 1);
    auto split_comma = [&](const std::string& row) {
        size_t comma = row.find(',');
        if (comma == std::string::npos) throw IoError("missing ',' in matrix row: " + text);
        return std::pair<std::string, std::string>(row.substr(0, comma), row.substr(comma + 1));
    };
    auto [a, b] = split_comma(row1);
    auto [c, d] = split_comma(row2);
    bool reversing = false;
    bool seen_flag = false;
    for (size_t k = close + 1; k < text.size(); ++k) {
        char ch = text[k];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '+') reversing = false;
        else if (ch == '-') reversing = true;
        else throw IoError(std::string("bad orientation flag '") + ch + "'");
        seen_flag = true;
        break;
    }
    if (!seen_flag) throw IoError("missing orientation flag (+ or -): " + text);
    return make_map(parse_complex(a), parse_complex(b), parse_complex(c), parse_complex(d),
                    reversing);
}

} // namespace schottky
