#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>

#include "helly/base.hpp"

namespace helly {

// Never compare a Rat against a plain integer with == or !=; spell it
// x.numerator() == 0 or x == Rat(k). Under C++20 rewritten candidates the
// heterogeneous boost::rational comparison operators call themselves.
using Rat = boost::rational<long long>;

// Renders "p/q", or just "p" when q == 1.
inline std::string rat_to_string(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

// Accepts "p", "p/q" and half-integers like "3/2". Empty result on junk.
inline std::optional<Rat> rat_from_string(const std::string& s) {
    auto parse_ll = [](const std::string& t, long long& out) {
        if (t.empty()) return false;
        std::size_t pos = 0;
        try {
            out = std::stoll(t, &pos);
        } catch (...) {
            return false;
        }
        return pos == t.size();
    };
    long long p = 0, q = 1;
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!parse_ll(s, p)) return std::nullopt;
    } else {
        if (!parse_ll(s.substr(0, slash), p)) return std::nullopt;
        if (!parse_ll(s.substr(slash + 1), q) || q == 0) return std::nullopt;
    }
    return Rat(p, q);
}

// Doubled half-integer -> exact rational in original units.
inline Rat undouble(Dist2 d2) { return Rat(d2, 2); }

}  // namespace helly
