#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symhom {

using Int = mpz_class;

// Sparse matrix over Z with arbitrary-precision entries.  Zero entries are
// never stored; iteration order is row-major and deterministic.
class SparseIntMatrix {
public:
    SparseIntMatrix() : rows_(0), cols_(0) {}
    SparseIntMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }

    // set overwrites (erasing on zero); add accumulates.
    void set(int r, int c, Int v);
    void add(int r, int c, const Int& v);
    Int get(int r, int c) const;

    const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }

    SparseIntMatrix transpose() const;
    SparseIntMatrix operator*(const SparseIntMatrix& rhs) const;
    bool operator==(const SparseIntMatrix& rhs) const = default;

    bool is_zero() const { return entries_.empty(); }

    // Keep only the given rows/columns, renumbered by position.
    SparseIntMatrix select(const std::vector<int>& row_idx,
                           const std::vector<int>& col_idx) const;

    // Coordinate triplet exchange format: "rows cols nnz" header followed by
    // one "r c v" line per entry in row-major order.
    std::string to_coord_text() const;
    static SparseIntMatrix from_coord_text(std::string_view text);

private:
    int rows_, cols_;
    std::map<std::pair<int, int>, Int> entries_;
    void check_index(int r, int c) const;
};

}  // namespace symhom
