#include <mzv/core/word.hpp>

#include <algorithm>
#include <ostream>

namespace mzv
{

BinaryWord BinaryWord::parse(const std::string &text)
{
    BinaryWord w;
    if (text.empty() || text == "e") {
        return w;
    }
    if (text.find('x') == std::string::npos) {
        for (const char c : text) {
            if (c != '0' && c != '1') {
                throw IndexError("malformed word '" + text + "'");
            }
            w.letters_.push_back(c == '0' ? Letter::x0 : Letter::x1);
        }
        return w;
    }
    if (text.size() % 2 != 0) {
        throw IndexError("malformed word '" + text + "'");
    }
    for (std::size_t i = 0; i < text.size(); i += 2) {
        if (text[i] != 'x' || (text[i + 1] != '0' && text[i + 1] != '1')) {
            throw IndexError("malformed word '" + text + "'");
        }
        w.letters_.push_back(text[i + 1] == '0' ? Letter::x0 : Letter::x1);
    }
    return w;
}

std::size_t BinaryWord::count_x1() const
{
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), Letter::x1));
}

bool BinaryWord::admissible() const
{
    return !letters_.empty() && letters_.front() == Letter::x0 && letters_.back() == Letter::x1;
}

BinaryWord BinaryWord::prefix(std::size_t n) const
{
    return BinaryWord(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

BinaryWord BinaryWord::suffix_from(std::size_t n) const
{
    return BinaryWord(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(n), letters_.end()));
}

BinaryWord BinaryWord::concat(const BinaryWord &other) const
{
    BinaryWord r = *this;
    r.letters_.insert(r.letters_.end(), other.letters_.begin(), other.letters_.end());
    return r;
}

std::string BinaryWord::to_string() const
{
    if (letters_.empty()) {
        return "e";
    }
    std::string s;
    s.reserve(2 * letters_.size());
    for (const auto l : letters_) {
        s += l == Letter::x0 ? "x0" : "x1";
    }
    return s;
}

std::ostream &operator<<(std::ostream &os, const BinaryWord &w) { return os << w.to_string(); }

BinaryWord index_to_word(const MzvIndex &index)
{
    std::vector<Letter> letters;
    letters.reserve(index.weight());
    for (const auto s : index.parts()) {
        letters.insert(letters.end(), s - 1, Letter::x0);
        letters.push_back(Letter::x1);
    }
    return BinaryWord(std::move(letters));
}

MzvIndex word_to_index(const BinaryWord &word)
{
    if (word.empty() || word.back() != Letter::x1) {
        throw IndexError("word '" + word.to_string() + "' does not encode an index (it must end in x1)");
    }
    std::vector<MzvIndex::Part> parts;
    MzvIndex::Part run = 1;
    for (const auto l : word.letters()) {
        if (l == Letter::x0) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    return MzvIndex(std::move(parts));
}

BinaryWord reverse_swap(const BinaryWord &word)
{
    std::vector<Letter> out(word.letters().rbegin(), word.letters().rend());
    for (auto &l : out) {
        l = l == Letter::x0 ? Letter::x1 : Letter::x0;
    }
    return BinaryWord(std::move(out));
}

MzvIndex dual(const MzvIndex &index)
{
    require_admissible(index, "dual");
    return word_to_index(reverse_swap(index_to_word(index)));
}

} // namespace mzv

std::size_t std::hash<mzv::BinaryWord>::operator()(const mzv::BinaryWord &w) const noexcept
{
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (const auto l : w.letters()) {
        h = (h ^ static_cast<std::size_t>(l)) * 0x100000001b3ULL + 0x9e37;
    }
    return h ^ w.size();
}
