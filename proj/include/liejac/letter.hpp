#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace liejac {

/// Triangular class of a generator. `param` is the formal scalar t that
/// appears after differentiating a t-decorated Cartan letter.
enum class LetterClass : std::uint8_t { neg = 0, cartan = 1, pos = 2, param = 3 };

/// One generator symbol x t^k u^a.
///
/// Letters are packed into a single integer whose natural order is the
/// PBW letter order: class first (neg < cartan < pos < param), then index,
/// then t-power, then u-flag.
class Letter {
public:
    static constexpr unsigned kMaxIndex = 4095;
    static constexpr unsigned kMaxTPower = 255;

    constexpr Letter() = default;
    Letter(LetterClass cls, unsigned index, unsigned t_power = 0, unsigned u_flag = 0);

    static Letter neg(unsigned i, unsigned t = 0, unsigned u = 0) { return {LetterClass::neg, i, t, u}; }
    static Letter cartan(unsigned i, unsigned t = 0, unsigned u = 0) { return {LetterClass::cartan, i, t, u}; }
    static Letter pos(unsigned i, unsigned t = 0, unsigned u = 0) { return {LetterClass::pos, i, t, u}; }
    /// The formal scalar t.
    static Letter param() { return {LetterClass::param, 0, 0, 0}; }
    static constexpr Letter from_code(std::uint32_t code)
    {
        Letter l;
        l.code_ = code;
        return l;
    }

    constexpr LetterClass cls() const { return static_cast<LetterClass>(code_ >> 24); }
    constexpr unsigned index() const { return (code_ >> 12) & 0xFFFu; }
    constexpr unsigned t_power() const { return (code_ >> 4) & 0xFFu; }
    constexpr unsigned u_flag() const { return code_ & 0x1u; }
    constexpr std::uint32_t code() const { return code_; }

    constexpr bool is_plain() const { return t_power() == 0 && u_flag() == 0; }
    constexpr bool is_param() const { return cls() == LetterClass::param; }

    Letter with_t(unsigned t) const { return {cls(), index(), t, u_flag()}; }
    Letter with_u(unsigned u) const { return {cls(), index(), t_power(), u}; }
    Letter base() const { return {cls(), index(), 0, 0}; }

    constexpr auto operator<=>(const Letter&) const = default;

    /// `neg:0:1:0` style canonical token.
    std::string token() const;
    static Letter parse_token(const std::string& token);
    /// Human form: f1, h2.t2, e3.u, t.
    std::string pretty() const;

private:
    std::uint32_t code_ = 0;
};

using Word = std::vector<Letter>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto l : w) {
            h ^= l.code();
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

std::string pretty(const Word& w);

} // namespace liejac

template <>
struct std::hash<liejac::Letter> {
    std::size_t operator()(liejac::Letter l) const noexcept { return std::hash<std::uint32_t>{}(l.code()); }
};
