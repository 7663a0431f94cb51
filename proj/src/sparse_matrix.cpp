#include "symhom/sparse_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "symhom/errors.hpp"

namespace symhom {

SparseIntMatrix::SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
}

void SparseIntMatrix::check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw ShapeMismatch("index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") out of range for " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
}

void SparseIntMatrix::set(int r, int c, Int v) {
    check_index(r, c);
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(v);
}

void SparseIntMatrix::add(int r, int c, const Int& v) {
    if (v == 0) return;
    check_index(r, c);
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        entries_.emplace(std::make_pair(r, c), v);
    } else {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

Int SparseIntMatrix::get(int r, int c) const {
    check_index(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Int(0) : it->second;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
    SparseIntMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeMismatch("matrix product shape mismatch");
    // rhs by row for cache-friendly accumulation
    std::vector<std::vector<std::pair<int, const Int*>>> rhs_rows(rhs.rows_);
    for (const auto& [rc, v] : rhs.entries_) rhs_rows[rc.first].push_back({rc.second, &v});
    SparseIntMatrix out(rows_, rhs.cols_);
    for (const auto& [rc, v] : entries_) {
        for (const auto& [c2, w] : rhs_rows[rc.second]) out.add(rc.first, c2, v * (*w));
    }
    return out;
}

SparseIntMatrix SparseIntMatrix::select(const std::vector<int>& row_idx,
                                        const std::vector<int>& col_idx) const {
    std::vector<int> rmap(rows_, -1), cmap(cols_, -1);
    for (std::size_t i = 0; i < row_idx.size(); ++i) rmap.at(row_idx[i]) = (int)i;
    for (std::size_t j = 0; j < col_idx.size(); ++j) cmap.at(col_idx[j]) = (int)j;
    SparseIntMatrix out((int)row_idx.size(), (int)col_idx.size());
    for (const auto& [rc, v] : entries_) {
        int r = rmap[rc.first], c = cmap[rc.second];
        if (r >= 0 && c >= 0) out.entries_[{r, c}] = v;
    }
    return out;
}

std::string SparseIntMatrix::to_coord_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << ' ' << entries_.size() << '\n';
    for (const auto& [rc, v] : entries_)
        os << rc.first << ' ' << rc.second << ' ' << v.get_str() << '\n';
    return os.str();
}

SparseIntMatrix SparseIntMatrix::from_coord_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    long rows, cols;
    std::size_t nnz;
    if (!(is >> rows >> cols >> nnz)) throw ParseError("bad coordinate header");
    SparseIntMatrix m((int)rows, (int)cols);
    for (std::size_t k = 0; k < nnz; ++k) {
        long r, c;
        std::string v;
        if (!(is >> r >> c >> v)) throw ParseError("truncated coordinate entry");
        m.set((int)r, (int)c, Int(v));
    }
    return m;
}

}  // namespace symhom
