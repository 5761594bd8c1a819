#ifndef MZV_EXACTLA_QMATRIX_HPP
#define MZV_EXACTLA_QMATRIX_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <mzv/core/formal_sum.hpp>
#include <mzv/core/index.hpp>
#include <mzv/exactla/rational.hpp>

namespace mzv
{

// Sparse row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Exact sparse matrix over Q. Rows are relations; columns are optionally
// labeled by indices (a labeled matrix has exactly ncols labels).
class QMatrix
{
public:
    explicit QMatrix(std::size_t ncols = 0) : ncols_(ncols) {}
    QMatrix(std::vector<MzvIndex> column_labels);

    static QMatrix identity(std::size_t n);
    // Dense construction, mainly for tests.
    static QMatrix from_dense(const std::vector<std::vector<Rational>> &rows);

    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    const std::vector<SparseRow> &rows() const { return rows_; }
    const SparseRow &row(std::size_t i) const { return rows_[i]; }
    const std::vector<MzvIndex> &column_labels() const { return labels_; }
    const std::vector<std::string> &row_labels() const { return row_labels_; }

    // Entries may arrive unsorted and with duplicates or zeros; they are
    // merged. Throws std::out_of_range for a column outside [0, ncols).
    void add_row(std::vector<std::pair<std::size_t, Rational>> entries, std::string label = {});
    // Adds a relation over the labeled columns. Throws std::out_of_range when
    // a term is not a column label.
    void add_row(const IndexSum &combo, std::string label = {});

    Rational at(std::size_t r, std::size_t c) const;
    std::vector<std::vector<Rational>> to_dense() const;
    QMatrix transpose() const;

    // Column of a label; throws std::out_of_range.
    std::size_t column_of(const MzvIndex &label) const;
    IndexSum row_as_sum(std::size_t r) const;

    // One relation per line: "label: +1*(4) -4*(3,1)".
    std::string dump() const;

private:
    std::size_t ncols_;
    std::vector<SparseRow> rows_;
    std::vector<std::string> row_labels_;
    std::vector<MzvIndex> labels_;
    std::unordered_map<MzvIndex, std::size_t> label_pos_;
};

} // namespace mzv

#endif
