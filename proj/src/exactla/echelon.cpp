#include <mzv/exactla/echelon.hpp>

#include <algorithm>
#include <stdexcept>

namespace mzv
{

namespace
{

using IntRow = std::vector<std::pair<std::uint32_t, Integer>>;

void make_primitive(IntRow &row)
{
    if (row.empty()) {
        return;
    }
    Integer g = 0;
    for (const auto &[p, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    if (sgn(row.front().second) < 0) {
        g = -g;
    }
    if (g != 1) {
        for (auto &[p, v] : row) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
    }
}

// Positions are indices into the column order.
IntRow to_int_row(const SparseRow &row, const std::vector<std::uint32_t> &pos_of_col)
{
    Integer l = 1;
    for (const auto &[c, v] : row) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    IntRow out;
    out.reserve(row.size());
    for (const auto &[c, v] : row) {
        Integer n = v.get_num() * (l / v.get_den());
        out.emplace_back(pos_of_col[c], std::move(n));
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    make_primitive(out);
    return out;
}

const Integer *find_at(const IntRow &row, std::uint32_t pos)
{
    const auto it = std::lower_bound(row.begin(), row.end(), pos, [](const auto &e, std::uint32_t p) { return e.first < p; });
    return it != row.end() && it->first == pos ? &it->second : nullptr;
}

// target <- ts * target - ss * source, with ts, ss chosen to cancel the
// entry of target at pos (source has a nonzero entry there).
void eliminate(IntRow &target, const IntRow &source, std::uint32_t pos, std::vector<RowOp> *trace, std::size_t tid,
               std::size_t sid)
{
    const Integer &a = *find_at(target, pos);
    const Integer &p = *find_at(source, pos);
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    const Integer ts = p / g;
    const Integer ss = a / g;
    IntRow out;
    out.reserve(target.size() + source.size());
    auto i = target.begin();
    auto j = source.begin();
    Integer v;
    while (i != target.end() || j != source.end()) {
        if (j == source.end() || (i != target.end() && i->first < j->first)) {
            out.emplace_back(i->first, ts * i->second);
            ++i;
        } else if (i == target.end() || j->first < i->first) {
            out.emplace_back(j->first, -ss * j->second);
            ++j;
        } else {
            v = ts * i->second - ss * j->second;
            if (sgn(v) != 0) {
                out.emplace_back(i->first, v);
            }
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    if (trace != nullptr) {
        trace->push_back(RowOp{tid, sid, ts, ss});
    }
    target = std::move(out);
}

struct Forward {
    std::vector<IntRow> rows;
    std::vector<std::size_t> pivots; // row ids, in increasing pivot position
};

Forward forward_pass(const QMatrix &m, const std::vector<std::uint32_t> &pos_of_col, std::vector<RowOp> *trace)
{
    Forward f;
    f.rows.reserve(m.nrows());
    std::map<std::uint32_t, std::set<std::size_t>> buckets;
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        f.rows.push_back(to_int_row(m.row(i), pos_of_col));
        if (!f.rows.back().empty()) {
            buckets[f.rows.back().front().first].insert(i);
        }
    }
    while (!buckets.empty()) {
        auto node = buckets.extract(buckets.begin());
        const std::uint32_t pos = node.key();
        auto &ids = node.mapped();
        const std::size_t piv = *ids.begin();
        f.pivots.push_back(piv);
        for (auto it = std::next(ids.begin()); it != ids.end(); ++it) {
            auto &r = f.rows[*it];
            eliminate(r, f.rows[piv], pos, trace, *it, piv);
            if (!r.empty()) {
                buckets[r.front().first].insert(*it);
            }
        }
    }
    return f;
}

std::vector<std::uint32_t> positions(const std::vector<std::size_t> &order, std::size_t ncols)
{
    if (order.size() != ncols) {
        throw std::invalid_argument("rref: column order has the wrong length");
    }
    std::vector<std::uint32_t> pos(ncols, UINT32_MAX);
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (order[k] >= ncols || pos[order[k]] != UINT32_MAX) {
            throw std::invalid_argument("rref: column order is not a permutation");
        }
        pos[order[k]] = static_cast<std::uint32_t>(k);
    }
    return pos;
}

std::vector<std::size_t> natural_order(std::size_t n)
{
    std::vector<std::size_t> o(n);
    for (std::size_t i = 0; i < n; ++i) {
        o[i] = i;
    }
    return o;
}

} // namespace

EchelonResult rref(const QMatrix &m, const std::vector<std::size_t> &column_order, bool record_trace)
{
    const auto pos_of_col = positions(column_order, m.ncols());
    std::vector<RowOp> trace;
    std::vector<RowOp> *tp = record_trace ? &trace : nullptr;
    Forward f = forward_pass(m, pos_of_col, tp);

    // Clear each pivot column above its pivot, last pivot first.
    for (std::size_t k = f.pivots.size(); k-- > 0;) {
        const IntRow &prow = f.rows[f.pivots[k]];
        const std::uint32_t pos = prow.front().first;
        for (std::size_t j = 0; j < k; ++j) {
            auto &r = f.rows[f.pivots[j]];
            if (find_at(r, pos) != nullptr) {
                eliminate(r, prow, pos, tp, f.pivots[j], f.pivots[k]);
            }
        }
    }

    EchelonResult res;
    res.rank = f.pivots.size();
    for (const auto id : f.pivots) {
        const IntRow &r = f.rows[id];
        const Integer &lead = r.front().second;
        res.pivot_columns.push_back(column_order[r.front().first]);
        SparseRow out;
        out.reserve(r.size());
        for (const auto &[p, v] : r) {
            Rational q(v, lead);
            q.canonicalize();
            out.emplace_back(column_order[p], std::move(q));
        }
        std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        res.reduced_rows.push_back(std::move(out));
    }
    if (record_trace) {
        res.transform_trace = std::move(trace);
    }
    return res;
}

EchelonResult rref(const QMatrix &m) { return rref(m, natural_order(m.ncols())); }

std::size_t rank(const QMatrix &m)
{
    const auto pos_of_col = positions(natural_order(m.ncols()), m.ncols());
    return forward_pass(m, pos_of_col, nullptr).pivots.size();
}

bool row_space_contains(const QMatrix &m, const SparseRow &v)
{
    QMatrix aug(m.ncols());
    for (const auto &r : m.rows()) {
        aug.add_row(std::vector<std::pair<std::size_t, Rational>>(r.begin(), r.end()));
    }
    aug.add_row(std::vector<std::pair<std::size_t, Rational>>(v.begin(), v.end()));
    return rank(aug) == rank(m);
}

std::vector<std::size_t> basis_last_order(std::size_t ncols, const std::set<std::size_t> &basis_cols)
{
    std::vector<std::size_t> order;
    order.reserve(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
        if (!basis_cols.contains(c)) {
            order.push_back(c);
        }
    }
    for (const auto c : basis_cols) {
        if (c >= ncols) {
            throw std::invalid_argument("express_in_span: basis column out of range");
        }
        order.push_back(c);
    }
    return order;
}

std::variant<SpanCoefficients, NotExpressible>
express_in_span(const EchelonResult &echelon, std::size_t target_col, const std::set<std::size_t> &basis_cols)
{
    if (basis_cols.contains(target_col)) {
        throw std::invalid_argument("express_in_span: target column is a basis column");
    }
    const auto it = std::find(echelon.pivot_columns.begin(), echelon.pivot_columns.end(), target_col);
    if (it == echelon.pivot_columns.end()) {
        return NotExpressible{"column " + std::to_string(target_col) + " is not determined by the relations"};
    }
    const SparseRow &row = echelon.reduced_rows[static_cast<std::size_t>(it - echelon.pivot_columns.begin())];
    SpanCoefficients coeffs;
    for (const auto &[c, v] : row) {
        if (c == target_col) {
            continue;
        }
        if (!basis_cols.contains(c)) {
            return NotExpressible{"column " + std::to_string(c) + " outside the basis survives elimination"};
        }
        coeffs.emplace(c, -v);
    }
    return coeffs;
}

std::variant<SpanCoefficients, NotExpressible>
express_in_span(const QMatrix &relations, std::size_t target_col, const std::set<std::size_t> &basis_cols)
{
    if (target_col >= relations.ncols()) {
        throw std::invalid_argument("express_in_span: target column out of range");
    }
    const auto order = basis_last_order(relations.ncols(), basis_cols);
    return express_in_span(rref(relations, order), target_col, basis_cols);
}

} // namespace mzv
