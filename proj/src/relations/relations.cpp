#include <mzv/relations/relations.hpp>

#include <set>
#include <stdexcept>

#include <mzv/core/dims.hpp>
#include <mzv/core/enumerate.hpp>
#include <mzv/core/word.hpp>
#include <mzv/exactla/echelon.hpp>
#include <mzv/relations/products.hpp>

namespace mzv
{

FamilySet FamilySet::parse(std::string_view text)
{
    FamilySet fs;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto tok = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        if (tok == "fds") {
            fs.bits_ |= static_cast<std::uint8_t>(Family::fds);
        } else if (tok == "hoffman") {
            fs.bits_ |= static_cast<std::uint8_t>(Family::hoffman);
        } else if (tok == "duality") {
            fs.bits_ |= static_cast<std::uint8_t>(Family::duality);
        } else {
            throw std::invalid_argument("unknown relation family '" + std::string(tok) +
                                        "' (expected fds, hoffman or duality)");
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return fs;
}

std::string FamilySet::to_string() const
{
    std::string s;
    for (const auto f : {Family::fds, Family::hoffman, Family::duality}) {
        if (contains(f)) {
            s += (s.empty() ? "" : ",") + std::string(family_name(f));
        }
    }
    return s;
}

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::fds:
        return "fds";
    case Family::hoffman:
        return "hoffman";
    case Family::duality:
        return "duality";
    }
    return "?";
}

Relation duality_rel(const MzvIndex &u)
{
    IndexSum combo(u);
    combo.add(dual(u), -1);
    return {std::move(combo), Family::duality, "DUALITY[" + u.to_display() + "]"};
}

Relation hoffman_rel(const MzvIndex &v)
{
    require_admissible(v, "hoffman_rel");
    const MzvIndex one{1};
    IndexSum combo = stuffle(one, v) - to_index_sum(shuffle(BinaryWord{Letter::x1}, index_to_word(v)));
    for (const auto &[k, c] : combo.terms()) {
        if (!k.admissible()) {
            throw std::logic_error("hoffman_rel: divergent term " + k.to_display() + " survived for " +
                                   v.to_display());
        }
    }
    return {std::move(combo), Family::hoffman, "HOFFMAN[" + v.to_display() + "]"};
}

Relation fds_rel(const MzvIndex &u, const MzvIndex &v)
{
    require_admissible(u, "fds_rel");
    require_admissible(v, "fds_rel");
    return {stuffle(u, v) - shuffle_indices(u, v), Family::fds,
            "FDS[" + u.to_display() + "," + v.to_display() + "]"};
}

std::vector<Relation> generate_relations(unsigned w, FamilySet families, unsigned cap)
{
    if (w < 2 || w > cap) {
        throw WeightRangeError("relations: weight " + std::to_string(w) + " outside [2, " + std::to_string(cap) + "]");
    }
    std::vector<Relation> out;
    if (families.contains(Family::duality)) {
        for (const auto &u : enumerate_admissible(w, cap)) {
            out.push_back(duality_rel(u));
        }
    }
    if (families.contains(Family::hoffman) && w >= 3) {
        for (const auto &v : enumerate_admissible(w - 1, cap)) {
            out.push_back(hoffman_rel(v));
        }
    }
    if (families.contains(Family::fds)) {
        for (unsigned w1 = 2; 2 * w1 <= w; ++w1) {
            const unsigned w2 = w - w1;
            if (w2 < 2) {
                continue;
            }
            const auto left = enumerate_admissible(w1, cap);
            const auto right = enumerate_admissible(w2, cap);
            for (std::size_t i = 0; i < left.size(); ++i) {
                for (std::size_t j = (w1 == w2 ? i : 0); j < right.size(); ++j) {
                    out.push_back(fds_rel(left[i], right[j]));
                }
            }
        }
    }
    return out;
}

namespace
{

// Scale-invariant key: the row divided by its first coefficient.
std::string row_key(const IndexSum &combo)
{
    const Rational lead = combo.terms().begin()->second;
    return combo.scaled(1 / lead).to_dump();
}

} // namespace

QMatrix build_relations(unsigned w, FamilySet families, unsigned cap)
{
    QMatrix m(enumerate_admissible(w, cap));
    std::set<std::string> seen;
    for (auto &rel : generate_relations(w, families, cap)) {
        if (rel.combo.empty()) {
            continue;
        }
        if (!seen.insert(row_key(rel.combo)).second) {
            continue;
        }
        m.add_row(rel.combo, rel.provenance);
    }
    return m;
}

DimensionReport dimension_bound(unsigned w, unsigned cap)
{
    const QMatrix m = build_relations(w, FamilySet::all(), cap);
    DimensionReport r;
    r.weight = w;
    r.num_unknowns = m.ncols();
    r.num_relations = m.nrows();
    r.rank = rank(m);
    r.upper_bound = r.num_unknowns - r.rank;
    r.conjectured = d_sequence(w)[w].get_ui();
    r.matches_conjecture = r.upper_bound == r.conjectured;
    return r;
}

} // namespace mzv
