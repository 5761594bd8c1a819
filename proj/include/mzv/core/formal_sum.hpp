#ifndef MZV_CORE_FORMAL_SUM_HPP
#define MZV_CORE_FORMAL_SUM_HPP

#include <map>
#include <optional>
#include <string>

#include <mzv/core/index.hpp>
#include <mzv/core/word.hpp>
#include <mzv/exactla/rational.hpp>

namespace mzv
{

inline std::string term_label(const MzvIndex &i) { return i.to_display(); }
inline std::string term_label(const BinaryWord &w) { return w.to_string(); }
inline std::uint64_t term_weight(const MzvIndex &i) { return i.weight(); }
inline std::uint64_t term_weight(const BinaryWord &w) { return w.size(); }

// Finite Q-linear combination of indices or words. Zero coefficients are
// never stored; iteration follows the key order (for indices: weight, then
// binary word value).
template <typename Key>
class FormalSum
{
public:
    using Terms = std::map<Key, Rational>;

    FormalSum() = default;
    explicit FormalSum(const Key &k, Rational c = 1) { add(k, c); }

    void add(const Key &k, const Rational &c)
    {
        if (sgn(c) == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) {
                terms_.erase(it);
            }
        }
    }

    FormalSum &operator+=(const FormalSum &o)
    {
        for (const auto &[k, c] : o.terms_) {
            add(k, c);
        }
        return *this;
    }
    FormalSum &operator-=(const FormalSum &o)
    {
        for (const auto &[k, c] : o.terms_) {
            add(k, -c);
        }
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum &b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum &b) { return a -= b; }

    FormalSum scaled(const Rational &q) const
    {
        FormalSum r;
        if (sgn(q) != 0) {
            for (const auto &[k, c] : terms_) {
                r.terms_.emplace(k, c * q);
            }
        }
        return r;
    }

    Rational coefficient(const Key &k) const
    {
        const auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Terms &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Sum of all coefficients.
    Rational mass() const
    {
        Rational m = 0;
        for (const auto &[k, c] : terms_) {
            m += c;
        }
        return m;
    }

    // Common weight of all keys, or nullopt when empty or mixed.
    std::optional<std::uint64_t> homogeneous_weight() const
    {
        std::optional<std::uint64_t> w;
        for (const auto &[k, c] : terms_) {
            const auto kw = term_weight(k);
            if (w && *w != kw) {
                return std::nullopt;
            }
            w = kw;
        }
        return w;
    }

    // "(5) + (3,2) + 2*(2,3) - 1/2*(4)"; the empty sum renders as "0".
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string s;
        bool first = true;
        for (const auto &[k, c] : terms_) {
            const bool neg = sgn(c) < 0;
            if (first) {
                s += neg ? "-" : "";
            } else {
                s += neg ? " - " : " + ";
            }
            const Rational a = abs(c);
            if (a != 1) {
                s += mzv::to_string(a) + "*";
            }
            s += term_label(k);
            first = false;
        }
        return s;
    }

    // "+1*(2,3) -1*(3,2)": every coefficient explicit, as in relation dumps.
    std::string to_dump() const
    {
        std::string s;
        for (const auto &[k, c] : terms_) {
            if (!s.empty()) {
                s += ' ';
            }
            s += (sgn(c) < 0 ? "-" : "+") + mzv::to_string(Rational(abs(c))) + "*" + term_label(k);
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const FormalSum &a, const FormalSum &b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

using IndexSum = FormalSum<MzvIndex>;
using WordSum = FormalSum<BinaryWord>;

// Parses the dump form "+1*(2,3) -4/3*(3,1)" (also accepts "(5) + (3,2) - 2*(2,3)").
IndexSum parse_index_sum(std::string_view text);

} // namespace mzv

#endif
