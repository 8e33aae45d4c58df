#include "liejac/letter.hpp"

#include "liejac/rational.hpp"

#include <sstream>

namespace liejac {

Letter::Letter(LetterClass cls, unsigned index, unsigned t_power, unsigned u_flag)
{
    if (index > kMaxIndex) {
        throw InvalidArgument("letter index out of range: " + std::to_string(index));
    }
    if (t_power > kMaxTPower) {
        throw TPowerOverflow("letter t-power out of range: " + std::to_string(t_power));
    }
    if (u_flag > 1) {
        throw InvalidArgument("u-flag must be 0 or 1");
    }
    code_ = (static_cast<std::uint32_t>(cls) << 24) | (index << 12) | (t_power << 4) | u_flag;
}

namespace {

const char* class_name(LetterClass c)
{
    switch (c) {
    case LetterClass::neg: return "neg";
    case LetterClass::cartan: return "cartan";
    case LetterClass::pos: return "pos";
    case LetterClass::param: return "param";
    }
    return "?";
}

} // namespace

std::string Letter::token() const
{
    std::ostringstream os;
    os << class_name(cls()) << ':' << index() << ':' << t_power() << ':' << u_flag();
    return os.str();
}

Letter Letter::parse_token(const std::string& token)
{
    std::istringstream is(token);
    std::string cls;
    unsigned idx = 0, t = 0, u = 0;
    char c1 = 0, c2 = 0;
    if (!std::getline(is, cls, ':') || !(is >> idx >> c1 >> t >> c2 >> u) || c1 != ':' || c2 != ':') {
        throw InvalidArgument("malformed letter token '" + token + "'");
    }
    if (cls == "neg") return Letter::neg(idx, t, u);
    if (cls == "cartan") return Letter::cartan(idx, t, u);
    if (cls == "pos") return Letter::pos(idx, t, u);
    if (cls == "param") return Letter::param();
    throw InvalidArgument("unknown letter class '" + cls + "'");
}

std::string Letter::pretty() const
{
    if (is_param()) {
        return "t";
    }
    std::string s;
    switch (cls()) {
    case LetterClass::neg: s = "f"; break;
    case LetterClass::cartan: s = "h"; break;
    default: s = "e"; break;
    }
    s += std::to_string(index() + 1);
    if (t_power() == 1) {
        s += ".t";
    } else if (t_power() > 1) {
        s += ".t" + std::to_string(t_power());
    }
    if (u_flag()) {
        s += ".u";
    }
    return s;
}

std::string pretty(const Word& w)
{
    if (w.empty()) {
        return "1";
    }
    std::string s;
    for (auto l : w) {
        s += "(" + l.pretty() + ")";
    }
    return s;
}

} // namespace liejac
