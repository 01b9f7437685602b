#pragma once

#include <cstdio>
#include <string>

namespace wlab::jsonio {

/// All reals are serialized with 17 significant digits so identical inputs
/// produce byte-identical reports.
inline std::string number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    out += '"';
    return out;
}

}  // namespace wlab::jsonio
