#include <mzv/relations/products.hpp>

#include <map>
#include <vector>

namespace mzv
{

namespace
{

using Parts = std::vector<MzvIndex::Part>;
using PartSum = std::map<Parts, Integer>;

class StuffleTable
{
public:
    StuffleTable(std::span<const MzvIndex::Part> u, std::span<const MzvIndex::Part> v)
        : u_(u), v_(v), memo_((u.size() + 1) * (v.size() + 1)), done_(memo_.size(), false)
    {
    }

    // Product of the suffixes u[i..] and v[j..].
    const PartSum &at(std::size_t i, std::size_t j)
    {
        const std::size_t slot = i * (v_.size() + 1) + j;
        if (done_[slot]) {
            return memo_[slot];
        }
        PartSum out;
        if (i == u_.size() || j == v_.size()) {
            const auto rest = i == u_.size() ? v_.subspan(j) : u_.subspan(i);
            out.emplace(Parts(rest.begin(), rest.end()), 1);
        } else {
            prepend(out, u_[i], at(i + 1, j));
            prepend(out, v_[j], at(i, j + 1));
            prepend(out, u_[i] + v_[j], at(i + 1, j + 1));
        }
        done_[slot] = true;
        return memo_[slot] = std::move(out);
    }

private:
    static void prepend(PartSum &out, MzvIndex::Part head, const PartSum &tail)
    {
        for (const auto &[parts, c] : tail) {
            Parts p;
            p.reserve(parts.size() + 1);
            p.push_back(head);
            p.insert(p.end(), parts.begin(), parts.end());
            out[std::move(p)] += c;
        }
    }

    std::span<const MzvIndex::Part> u_;
    std::span<const MzvIndex::Part> v_;
    std::vector<PartSum> memo_;
    std::vector<bool> done_;
};

using Letters = std::vector<Letter>;
using LetterSum = std::map<Letters, Integer>;

class ShuffleTable
{
public:
    ShuffleTable(const Letters &a, const Letters &b)
        : a_(a), b_(b), memo_((a.size() + 1) * (b.size() + 1)), done_(memo_.size(), false)
    {
    }

    const LetterSum &at(std::size_t i, std::size_t j)
    {
        const std::size_t slot = i * (b_.size() + 1) + j;
        if (done_[slot]) {
            return memo_[slot];
        }
        LetterSum out;
        if (i == a_.size() || j == b_.size()) {
            out.emplace(i == a_.size() ? Letters(b_.begin() + static_cast<std::ptrdiff_t>(j), b_.end())
                                       : Letters(a_.begin() + static_cast<std::ptrdiff_t>(i), a_.end()),
                        1);
        } else {
            prepend(out, a_[i], at(i + 1, j));
            prepend(out, b_[j], at(i, j + 1));
        }
        done_[slot] = true;
        return memo_[slot] = std::move(out);
    }

private:
    static void prepend(LetterSum &out, Letter head, const LetterSum &tail)
    {
        for (const auto &[w, c] : tail) {
            Letters l;
            l.reserve(w.size() + 1);
            l.push_back(head);
            l.insert(l.end(), w.begin(), w.end());
            out[std::move(l)] += c;
        }
    }

    const Letters &a_;
    const Letters &b_;
    std::vector<LetterSum> memo_;
    std::vector<bool> done_;
};

} // namespace

IndexSum stuffle(const MzvIndex &u, const MzvIndex &v)
{
    StuffleTable table(u.parts(), v.parts());
    IndexSum out;
    for (const auto &[parts, c] : table.at(0, 0)) {
        out.add(MzvIndex(parts), Rational(c));
    }
    return out;
}

WordSum shuffle(const BinaryWord &a, const BinaryWord &b)
{
    ShuffleTable table(a.letters(), b.letters());
    WordSum out;
    for (const auto &[letters, c] : table.at(0, 0)) {
        out.add(BinaryWord(letters), Rational(c));
    }
    return out;
}

IndexSum to_index_sum(const WordSum &words)
{
    IndexSum out;
    for (const auto &[w, c] : words.terms()) {
        out.add(word_to_index(w), c);
    }
    return out;
}

IndexSum shuffle_indices(const MzvIndex &u, const MzvIndex &v)
{
    return to_index_sum(shuffle(index_to_word(u), index_to_word(v)));
}

} // namespace mzv
