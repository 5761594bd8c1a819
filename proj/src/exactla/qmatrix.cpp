#include <mzv/exactla/qmatrix.hpp>

#include <algorithm>
#include <stdexcept>

namespace mzv
{

QMatrix::QMatrix(std::vector<MzvIndex> column_labels) : ncols_(column_labels.size()), labels_(std::move(column_labels))
{
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        label_pos_.emplace(labels_[i], i);
    }
}

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.add_row({{i, Rational(1)}});
    }
    return m;
}

QMatrix QMatrix::from_dense(const std::vector<std::vector<Rational>> &rows)
{
    QMatrix m(rows.empty() ? 0 : rows.front().size());
    for (const auto &r : rows) {
        if (r.size() != m.ncols_) {
            throw std::invalid_argument("QMatrix::from_dense: ragged rows");
        }
        std::vector<std::pair<std::size_t, Rational>> e;
        for (std::size_t c = 0; c < r.size(); ++c) {
            e.emplace_back(c, r[c]);
        }
        m.add_row(std::move(e));
    }
    return m;
}

void QMatrix::add_row(std::vector<std::pair<std::size_t, Rational>> entries, std::string label)
{
    std::sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    SparseRow row;
    for (auto &[c, v] : entries) {
        if (c >= ncols_) {
            throw std::out_of_range("QMatrix::add_row: column " + std::to_string(c) + " out of range");
        }
        if (!row.empty() && row.back().first == c) {
            row.back().second += v;
            if (sgn(row.back().second) == 0) {
                row.pop_back();
            }
        } else if (sgn(v) != 0) {
            row.emplace_back(c, std::move(v));
        }
    }
    rows_.push_back(std::move(row));
    row_labels_.push_back(std::move(label));
}

void QMatrix::add_row(const IndexSum &combo, std::string label)
{
    std::vector<std::pair<std::size_t, Rational>> e;
    e.reserve(combo.size());
    for (const auto &[k, c] : combo.terms()) {
        e.emplace_back(column_of(k), c);
    }
    add_row(std::move(e), std::move(label));
}

std::size_t QMatrix::column_of(const MzvIndex &label) const
{
    const auto it = label_pos_.find(label);
    if (it == label_pos_.end()) {
        throw std::out_of_range("QMatrix: no column labeled " + label.to_display());
    }
    return it->second;
}

Rational QMatrix::at(std::size_t r, std::size_t c) const
{
    const auto &row = rows_.at(r);
    const auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto &e, std::size_t col) { return e.first < col; });
    return it != row.end() && it->first == c ? it->second : Rational(0);
}

std::vector<std::vector<Rational>> QMatrix::to_dense() const
{
    std::vector<std::vector<Rational>> d(rows_.size(), std::vector<Rational>(ncols_));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto &[c, v] : rows_[r]) {
            d[r][c] = v;
        }
    }
    return d;
}

QMatrix QMatrix::transpose() const
{
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(ncols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto &[c, v] : rows_[r]) {
            cols[c].emplace_back(r, v);
        }
    }
    QMatrix t(rows_.size());
    for (auto &c : cols) {
        t.add_row(std::move(c));
    }
    return t;
}

IndexSum QMatrix::row_as_sum(std::size_t r) const
{
    if (labels_.size() != ncols_) {
        throw std::logic_error("QMatrix::row_as_sum: matrix has no column labels");
    }
    IndexSum s;
    for (const auto &[c, v] : rows_.at(r)) {
        s.add(labels_[c], v);
    }
    return s;
}

std::string QMatrix::dump() const
{
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out += (row_labels_[r].empty() ? "R" + std::to_string(r) : row_labels_[r]) + ": ";
        if (labels_.size() == ncols_) {
            out += row_as_sum(r).to_dump();
        } else {
            std::string s;
            for (const auto &[c, v] : rows_[r]) {
                s += (s.empty() ? "" : " ") + std::string(sgn(v) < 0 ? "-" : "+") + to_string(Rational(abs(v))) +
                     "*[" + std::to_string(c) + "]";
            }
            out += s.empty() ? "0" : s;
        }
        out += '\n';
    }
    return out;
}

} // namespace mzv
