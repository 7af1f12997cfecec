#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "bits.hpp"

namespace sboxkit {

enum class TableKind { walsh, act, lat_raw, lat_centered, ddt, bct, dlct };

inline const char* to_string(TableKind k)
{
    switch (k) {
    case TableKind::walsh: return "walsh";
    case TableKind::act: return "act";
    case TableKind::lat_raw: return "lat_raw";
    case TableKind::lat_centered: return "lat_centered";
    case TableKind::ddt: return "ddt";
    case TableKind::bct: return "bct";
    case TableKind::dlct: return "dlct";
    }
    return "?";
}

/// Dense row-major signed table. Row/column semantics depend on the kind:
///   walsh         [output mask gamma][input mask rho]
///   act, dlct     [input difference][output mask]
///   lat_*         [input mask][output mask]
///   ddt, bct      [input difference][output difference]
class SpectrumTable {
  public:
    SpectrumTable(TableKind kind, std::size_t rows, std::size_t cols)
        : kind_(kind), rows_(rows), cols_(cols), data_(rows * cols, 0)
    {
    }

    TableKind kind() const noexcept { return kind_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<std::int32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const std::int32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<const std::int32_t> values() const noexcept { return data_; }

    /// Largest |entry| over rows >= row_from and cols >= col_from.
    std::int32_t max_abs(std::size_t row_from = 0, std::size_t col_from = 0) const
    {
        std::int32_t best = 0;
        for (std::size_t r = row_from; r < rows_; ++r)
            for (std::size_t c = col_from; c < cols_; ++c)
                best = std::max(best, (*this)(r, c) < 0 ? -(*this)(r, c) : (*this)(r, c));
        return best;
    }

    SpectrumTable transposed() const
    {
        SpectrumTable t(kind_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const SpectrumTable& a, const SpectrumTable& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    TableKind kind_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::int32_t> data_;
};

/// Tables with more than 2^24 cells are refused.
inline constexpr unsigned kMaxTableLog2 = 24;

inline void require_table_size(unsigned row_bits, unsigned col_bits, const char* what)
{
    if (row_bits + col_bits > kMaxTableLog2)
        throw PreconditionError(std::string(what) + ": table of 2^" + std::to_string(row_bits + col_bits) +
                                " cells exceeds the 2^24 limit");
}

/// CSV with a header row of column indices; first column holds the row index.
inline void write_csv(std::ostream& out, const SpectrumTable& t)
{
    out << to_string(t.kind());
    for (std::size_t c = 0; c < t.cols(); ++c)
        out << ',' << c;
    out << '\n';
    for (std::size_t r = 0; r < t.rows(); ++r) {
        out << r;
        for (std::size_t c = 0; c < t.cols(); ++c)
            out << ',' << t(r, c);
        out << '\n';
    }
}

inline std::string to_csv(const SpectrumTable& t)
{
    std::ostringstream out;
    write_csv(out, t);
    return out.str();
}

} // namespace sboxkit
