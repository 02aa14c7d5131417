#include "matchk/rational.hpp"

#include <cctype>

namespace matchk {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational parse_rational(const std::string& token) {
    if (token.empty()) throw ParseError("empty numeric token");
    std::string::size_type i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (i == token.size()) throw ParseError("bad numeric token: " + token);
    bool seen_slash = false;
    for (; i < token.size(); ++i) {
        char c = token[i];
        if (c == '/') {
            if (seen_slash || i + 1 == token.size())
                throw ParseError("bad numeric token: " + token);
            seen_slash = true;
        } else if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("bad numeric token: " + token);
        }
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), token.c_str(), 10) != 0)
        throw ParseError("bad numeric token: " + token);
    if (mpq_denref(q.get_mpq_t())->_mp_size == 0)
        throw ParseError("zero denominator: " + token);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    Rational r = q;
    r.canonicalize();  // raw mpq_class constructions may be unreduced
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace matchk
