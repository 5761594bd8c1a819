#ifndef MZV_CORE_WORD_HPP
#define MZV_CORE_WORD_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <mzv/core/index.hpp>

namespace mzv
{

enum class Letter : std::uint8_t { x0 = 0, x1 = 1 };

// Word over {x0, x1}; index (s_1,...,s_l) corresponds to
// x0^(s_1-1) x1 x0^(s_2-1) x1 ... x0^(s_l-1) x1.
class BinaryWord
{
public:
    BinaryWord() = default;
    BinaryWord(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit BinaryWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    // Accepts "x0x1x1" or the bit form "011"; "" and "e" denote the empty word.
    static BinaryWord parse(const std::string &text);

    const std::vector<Letter> &letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }

    // Number of x1 letters (the depth of the encoded index).
    std::size_t count_x1() const;
    // Starts with x0 and ends with x1.
    bool admissible() const;

    BinaryWord prefix(std::size_t n) const;
    BinaryWord suffix_from(std::size_t n) const;
    BinaryWord concat(const BinaryWord &other) const;
    void push_back(Letter l) { letters_.push_back(l); }

    // "x0x1x1"; the empty word renders as "e".
    std::string to_string() const;

    friend auto operator<=>(const BinaryWord &, const BinaryWord &) = default;
    friend bool operator==(const BinaryWord &, const BinaryWord &) = default;

private:
    std::vector<Letter> letters_;
};

std::ostream &operator<<(std::ostream &os, const BinaryWord &w);

BinaryWord index_to_word(const MzvIndex &index);
// Throws IndexError when the word is empty or does not end in x1.
MzvIndex word_to_index(const BinaryWord &word);

// Reverse the word and swap x0 <-> x1 (the duality involution on words).
BinaryWord reverse_swap(const BinaryWord &word);

// Dual index: word_to_index(reverse_swap(index_to_word(index))). Requires an
// admissible index; the result is admissible and of the same weight.
MzvIndex dual(const MzvIndex &index);

} // namespace mzv

template <>
struct std::hash<mzv::BinaryWord> {
    std::size_t operator()(const mzv::BinaryWord &w) const noexcept;
};

#endif
