#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace frc {

inline constexpr const char* kVersion = "0.1.0";

using NodeId = std::uint32_t;

/// Malformed user input: bad files, arguments outside the documented contract.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural invariant of the library was violated (closure breach,
/// accumulator mismatch, ...). Indicates a bug, not bad input.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact ratio of 64-bit integers, kept normalized (gcd 1, denominator > 0).
/// Curvature averages and local values are ratios of exact integer
/// accumulators, so equality checks on Rational are exact, never tolerance
/// based.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw InvariantError("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        num = g ? n / g : 0;
        den = g ? d / g : 1;
    }

    static Rational zero() { return Rational(); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    Rational operator+(const Rational& o) const {
        const __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
        const __int128 d = static_cast<__int128>(den) * o.den;
        const __int128 lim = static_cast<__int128>(INT64_MAX);
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g == 0) return Rational();
        const __int128 rn = n / g, rd = d / g;
        if (rn > lim || rn < -lim || rd > lim)
            throw InvariantError("rational sum overflows 64 bits");
        return Rational(static_cast<std::int64_t>(rn), static_cast<std::int64_t>(rd));
    }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
};

/// m observations as rows of an m x n coordinate matrix, row-major.
/// Node ids are the row indices 0..m-1.
class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0.0) {
        check_shape();
    }
    PointCloud(std::int64_t rows, std::int64_t cols, std::vector<double> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        check_shape();
        if (static_cast<std::int64_t>(data_.size()) != rows_ * cols_)
            throw InputError("point cloud data size does not match shape");
        for (double v : data_)
            if (!std::isfinite(v)) throw InputError("point cloud contains a non-finite coordinate");
    }

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    double at(std::int64_t i, std::int64_t j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    double& at(std::int64_t i, std::int64_t j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    const double* row(std::int64_t i) const { return data_.data() + i * cols_; }
    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

private:
    void check_shape() const {
        if (rows_ < 1 || cols_ < 1) throw InputError("point cloud must have at least one row and one column");
    }

    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::vector<double> data_;
};

/// Symmetric m x m matrix of pairwise distances with zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::int64_t size)
        : size_(size), data_(static_cast<std::size_t>(size * size), 0.0) {
        if (size_ < 1) throw InputError("distance matrix must have at least one row");
    }
    DistanceMatrix(std::int64_t size, std::vector<double> data) : size_(size), data_(std::move(data)) {
        if (size_ < 1) throw InputError("distance matrix must have at least one row");
        if (static_cast<std::int64_t>(data_.size()) != size_ * size_)
            throw InputError("distance matrix data size does not match shape");
        validate();
    }

    std::int64_t size() const { return size_; }

    double at(std::int64_t i, std::int64_t j) const { return data_[static_cast<std::size_t>(i * size_ + j)]; }
    double& at(std::int64_t i, std::int64_t j) { return data_[static_cast<std::size_t>(i * size_ + j)]; }

    const double* row(std::int64_t i) const { return data_.data() + i * size_; }

    /// Largest entry; the diameter of the underlying point set.
    double max_entry() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, v);
        return m;
    }

    void validate() const {
        for (std::int64_t i = 0; i < size_; ++i) {
            if (at(i, i) != 0.0) throw InputError("distance matrix diagonal must be zero");
            for (std::int64_t j = i + 1; j < size_; ++j) {
                const double d = at(i, j);
                if (!std::isfinite(d)) throw InputError("distance matrix contains a non-finite entry");
                if (d < 0.0) throw InputError("distance matrix contains a negative entry");
                if (d != at(j, i)) throw InputError("distance matrix is not symmetric");
            }
        }
    }

private:
    std::int64_t size_ = 0;
    std::vector<double> data_;
};

/// A face of the complex: strictly ascending node ids plus its filtration
/// weight (the diameter, i.e. max pairwise distance; 0 for singletons).
struct Simplex {
    std::vector<NodeId> nodes;
    double weight = 0.0;

    int dim() const { return static_cast<int>(nodes.size()) - 1; }

    bool operator==(const Simplex& o) const { return nodes == o.nodes && weight == o.weight; }
};

/// Total order on faces: weight, then dimension, then lexicographic node
/// order. Dimension-ascending within a weight group guarantees the
/// neighbourhood index for (d-1)-faces is complete before any same-weight
/// d-face queries it.
inline bool face_less(const Simplex& a, const Simplex& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
    return a.nodes < b.nodes;
}

/// The weight-sorted face stream of a Vietoris-Rips filtration. Closed under
/// taking boundaries; every face appears after all of its boundary faces.
/// max_dim is one above the highest curvature dimension the stream serves:
/// the extra level carries the higher faces through which top-dimensional
/// curvature sees its transverse neighbours.
struct Filtration {
    std::vector<Simplex> faces;
    int max_dim = 2;        // largest face dimension included
    double max_dist = 0.0;  // cutoff ceiling used at enumeration time
    std::int64_t node_count = 0;
};

/// Binomial coefficient with overflow detection.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > static_cast<__int128>(INT64_MAX)) throw InvariantError("binomial overflows 64 bits");
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace frc
