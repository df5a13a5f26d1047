#include "gtbasis/rational.hpp"

#include <stdexcept>

#include "gtbasis/errors.hpp"

namespace gtb {

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto valid_int = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("not an exact rational: '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

HalfInt HalfInt::from_rational(const Rational& r) {
    Rational twice = r * 2;
    if (twice.get_den() != 1)
        throw InvalidWeight(to_string(r) + " is neither an integer nor a half-integer");
    if (!twice.get_num().fits_slong_p())
        throw InvalidWeight(to_string(r) + " is out of range");
    return from_doubled(twice.get_num().get_si());
}

std::string to_string(HalfInt h) {
    if (h.is_integer()) return std::to_string(h.doubled() / 2);
    return std::to_string(h.doubled()) + "/2";
}

}  // namespace gtb
