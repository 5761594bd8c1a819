#ifndef MZV_EXACTLA_ECHELON_HPP
#define MZV_EXACTLA_ECHELON_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <mzv/exactla/qmatrix.hpp>

namespace mzv
{

// target_row <- target_scale * target_row - source_scale * source_row, then
// divided by its content. Rows are numbered as in the input matrix.
struct RowOp {
    std::size_t target;
    std::size_t source;
    Integer target_scale;
    Integer source_scale;
};

struct EchelonResult {
    std::size_t rank = 0;
    // Pivot columns (original numbering) in the order of the supplied column order.
    std::vector<std::size_t> pivot_columns;
    // One row per pivot, same order; pivot entry 1, zero in every other pivot column.
    std::vector<SparseRow> reduced_rows;
    std::optional<std::vector<RowOp>> transform_trace;
};

// Reduced row-echelon form with respect to column_order (a permutation of
// 0..ncols-1; the first listed column is eliminated first).
//
// Forward pass is fraction-free: rows are scaled to primitive integer vectors
// and combined as p*r - a*s followed by division by the content. The pivot
// for the leading remaining column is the lowest-numbered row that has it.
// Back-substitution is exact; results are normalized to pivot 1 at the end.
// Throws std::invalid_argument when column_order is not a permutation.
EchelonResult rref(const QMatrix &m, const std::vector<std::size_t> &column_order, bool record_trace = false);
EchelonResult rref(const QMatrix &m);

// Rank under the natural column order (forward pass only).
std::size_t rank(const QMatrix &m);

// Does the row space of m contain v (given as a sparse row)?
bool row_space_contains(const QMatrix &m, const SparseRow &v);

struct NotExpressible {
    std::string reason;
};

using SpanCoefficients = std::map<std::size_t, Rational>;

// Coefficients c_b (b in basis_cols) with e_target - sum c_b e_b in the row
// space of relations, or NotExpressible when the relations cannot eliminate
// every non-basis direction from e_target. Zero coefficients are omitted.
// Throws std::invalid_argument when target is in basis_cols or out of range.
std::variant<SpanCoefficients, NotExpressible>
express_in_span(const QMatrix &relations, std::size_t target_col, const std::set<std::size_t> &basis_cols);

// Same, reusing an echelon form computed with basis columns last in the order.
std::variant<SpanCoefficients, NotExpressible>
express_in_span(const EchelonResult &echelon, std::size_t target_col, const std::set<std::size_t> &basis_cols);

// Column order listing every non-basis column (ascending) and then every basis column (ascending).
std::vector<std::size_t> basis_last_order(std::size_t ncols, const std::set<std::size_t> &basis_cols);

} // namespace mzv

#endif
