#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "grassnet/error.hpp"

namespace grassnet {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational scalar. boost keeps the value in lowest
// terms with a positive denominator, which is exactly the invariant the
// rest of the library relies on. No floating point anywhere in the core.
using Rational = boost::multiprecision::cpp_rational;

/// Build p/q, normalizing the sign of q. Throws on q = 0.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) {
        throw ValidationError("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline int sign(const Rational& x) {
    return x.sign();
}

/// Serialize as "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_string(const Rational& x) {
    return x.str();
}

/// Parse "p/q" or "p" with an optional leading sign. Rejects anything else.
inline Rational parse_rational(const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    bool digits = false;
    bool slash = false;
    for (const char ch : body) {
        if (ch >= '0' && ch <= '9') {
            digits = true;
        } else if (ch == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw ValidationError("malformed rational literal: \"" + text + "\"");
        }
    }
    if (!digits) {
        throw ValidationError("malformed rational literal: \"" + text + "\"");
    }
    Rational value;
    if (slash) {
        const std::size_t cut = body.find('/');
        value = make_rational(Integer(body.substr(0, cut)), Integer(body.substr(cut + 1)));
    } else {
        value = Rational(Integer(body));
    }
    return negative ? -value : value;
}

} // namespace grassnet
