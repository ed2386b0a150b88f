#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "omnisig/rational.hpp"

namespace omnisig {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Surface genus, sigma >= 2.
class Genus {
public:
    explicit Genus(std::int64_t value) : value_(value) {
        if (value < 2) throw std::invalid_argument("Genus: value must be >= 2");
    }
    std::int64_t value() const { return value_; }
    friend auto operator<=>(const Genus&, const Genus&) = default;

private:
    std::int64_t value_;
};

/// A tuple (h; m_1,...,m_r): orbit genus h >= 0 and branch periods m_i >= 2.
/// Periods are kept sorted non-decreasing, so equality is multiset equality.
class Signature {
public:
    Signature(std::int64_t orbit_genus, std::vector<std::int64_t> periods)
        : orbit_genus_(orbit_genus), periods_(std::move(periods)) {
        if (orbit_genus_ < 0)
            throw std::invalid_argument("Signature: orbit genus must be >= 0");
        for (std::int64_t m : periods_)
            if (m < 2) throw std::invalid_argument("Signature: every period must be >= 2");
        std::sort(periods_.begin(), periods_.end());
    }

    std::int64_t orbit_genus() const { return orbit_genus_; }
    const std::vector<std::int64_t>& periods() const { return periods_; }
    std::int64_t period_count() const { return static_cast<std::int64_t>(periods_.size()); }

    friend bool operator==(const Signature&, const Signature&) = default;

    // Total order (h, r, lexicographic periods); used for all canonical output.
    friend std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
        if (auto c = a.orbit_genus_ <=> b.orbit_genus_; c != 0) return c;
        if (auto c = a.period_count() <=> b.period_count(); c != 0) return c;
        return a.periods_ <=> b.periods_;
    }

private:
    std::int64_t orbit_genus_;
    std::vector<std::int64_t> periods_;
};

/// h - 1 + 1/2 * sum(1 - 1/m_i), the exact factor multiplying the group
/// order in the Riemann-Hurwitz formula.
inline Rational reduced_euler(const Signature& sig) {
    Rational acc(sig.orbit_genus() - 1);
    for (std::int64_t m : sig.periods())
        acc = acc + Rational(m - 1, 2 * m);
    return acc;
}

/// The unique group order N with sigma - 1 = N * reduced_euler(sig), when it
/// is a positive integer. Deliberately does not check period divisibility.
inline std::optional<std::int64_t> required_group_order(const Signature& sig, Genus g) {
    const Rational chi = reduced_euler(sig);
    if (!(chi > Rational(0))) return std::nullopt;
    const Rational n = Rational(g.value() - 1) / chi;
    if (!n.is_integer()) return std::nullopt;
    return n.as_integer();
}

/// Both arithmetic conditions of a potential signature: the Riemann-Hurwitz
/// formula solvable for a positive integer N, and every period dividing N.
inline bool is_potential(const Signature& sig, Genus g) {
    const auto n = required_group_order(sig, g);
    if (!n) return false;
    for (std::int64_t m : sig.periods())
        if (*n % m != 0) return false;
    return true;
}

/// "(h; m1,m2,...,mr)" with one space after the semicolon and no spaces
/// around commas; "(h; -)" when r = 0.
inline std::string format_signature(const Signature& sig) {
    std::string out = "(" + std::to_string(sig.orbit_genus()) + "; ";
    if (sig.periods().empty()) {
        out += "-";
    } else {
        bool first = true;
        for (std::int64_t m : sig.periods()) {
            if (!first) out += ",";
            out += std::to_string(m);
            first = false;
        }
    }
    out += ")";
    return out;
}

namespace detail {

struct SigLexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c))
            throw parse_error(std::string("signature: expected '") + c + "' (" + what +
                              ") at offset " + std::to_string(pos) + " in \"" +
                              std::string(text) + "\"");
    }
    std::int64_t integer(const char* what) {
        skip_ws();
        const std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') { neg = true; ++pos; }
        std::int64_t v = 0;
        bool any = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = checked_add(checked_mul(v, 10), text[pos] - '0');
            ++pos;
            any = true;
        }
        if (!any)
            throw parse_error(std::string("signature: expected ") + what + " at offset " +
                              std::to_string(start) + " in \"" + std::string(text) + "\"");
        return neg ? -v : v;
    }
    bool at_end() {
        skip_ws();
        return pos == text.size();
    }
};

} // namespace detail

/// Parses the signature grammar "(h; m1,...,mr)" / "(h; -)"; periods are
/// canonicalized into non-decreasing order.
inline Signature parse_signature(std::string_view text) {
    detail::SigLexer lx{text};
    lx.expect('(', "opening parenthesis");
    const std::int64_t h = lx.integer("orbit genus");
    if (h < 0)
        throw parse_error("signature: orbit genus must be non-negative, got " +
                          std::to_string(h));
    lx.expect(';', "semicolon");
    std::vector<std::int64_t> periods;
    lx.skip_ws();
    if (lx.pos < lx.text.size() && lx.text[lx.pos] == '-') {
        ++lx.pos;
    } else {
        for (;;) {
            const std::int64_t m = lx.integer("period");
            if (m < 2)
                throw parse_error("signature: period must be >= 2, got " + std::to_string(m));
            periods.push_back(m);
            if (!lx.eat(',')) break;
        }
    }
    lx.expect(')', "closing parenthesis");
    if (!lx.at_end())
        throw parse_error("signature: trailing characters after ')' in \"" +
                          std::string(text) + "\"");
    return Signature(h, std::move(periods));
}

} // namespace omnisig
